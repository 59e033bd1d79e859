#include "fracwave/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "fracwave/error.hpp"
#include "fracwave/exact.hpp"
#include "fracwave/spectral.hpp"

namespace fracwave {
namespace {

std::shared_ptr<const TravelingProfile> smooth_profile(double c) {
  static std::mutex mutex;
  static std::map<double, std::shared_ptr<const TravelingProfile>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[c];
  if (!slot) slot = std::make_shared<const TravelingProfile>(ch_smooth_profile(c));
  return slot;
}

double periodic_distance(double a, double b, double length) {
  const double r = std::fmod(std::abs(a - b), length);
  return std::min(r, length - r);
}

std::vector<ExperimentSpec> build_catalog() {
  std::vector<ExperimentSpec> out;
  const ModelParams ch = ModelParams::camassa_holm();

  {
    ExperimentSpec s;
    s.name = "ex1-smooth";
    s.description = "smooth Camassa-Holm traveling wave (c = 3) on ten periods, T = 1";
    s.params = ch;
    s.x_left = 0.0;
    s.length = 10.0 * smooth_profile(3.0)->period();
    s.initial = InitialKind::SmoothProfile;
    s.speed = 3.0;
    s.t_end = 1.0;
    s.n_list = {16, 32, 64, 128, 256};
    s.nodes = 256;
    s.snapshot_times = {0.0, 1.0};
    out.push_back(s);
  }
  {
    ExperimentSpec s;
    s.name = "ex2-peakon";
    s.description = "Camassa-Holm peakon c = 1 from x0 = 25 on [0, 50], T = 10, masked error";
    s.params = ch;
    s.x_left = 0.0;
    s.length = 50.0;
    s.initial = InitialKind::Peakon;
    s.speed = 1.0;
    s.x0 = 25.0;
    s.t_end = 10.0;
    s.n_list = {512, 1024, 2048, 4096, 8192};
    s.nodes = 1024;
    s.dt = 1e-4;
    s.mask_half_width = 1.0;
    s.snapshot_times = {0.0, 10.0};
    out.push_back(s);
  }
  {
    ExperimentSpec s;
    s.name = "ex3-two-peakon";
    s.description = "two periodized peakons (2, 1) at (-5, 5) on [0, 30], T = 20";
    s.params = ch;
    s.x_left = 0.0;
    s.length = 30.0;
    s.initial = InitialKind::PeakonTrain;
    s.peakons = {{2.0, -5.0}, {1.0, 5.0}};
    s.has_oracle = false;
    s.t_end = 20.0;
    s.nodes = 1024;
    s.dt = 5e-3;
    s.snapshot_times = {0.0, 5.0, 12.0, 20.0};
    out.push_back(s);
  }
  {
    ExperimentSpec s;
    s.name = "ex3-three-peakon";
    s.description = "three periodized peakons (2, 1, 0.8) at (-5, -3, -1) on [0, 30], T = 3";
    s.params = ch;
    s.x_left = 0.0;
    s.length = 30.0;
    s.initial = InitialKind::PeakonTrain;
    s.peakons = {{2.0, -5.0}, {1.0, -3.0}, {0.8, -1.0}};
    s.has_oracle = false;
    s.t_end = 3.0;
    s.nodes = 1024;
    s.dt = 5e-3;
    s.snapshot_times = {0.0, 1.0, 2.0, 3.0};
    out.push_back(s);
  }
  {
    ExperimentSpec s;
    s.name = "ex4-alpha-sweep";
    s.description = "peakon exp(-|x - 25|) under alpha in {1, 1.4, 1.7, 2} on [0, 50], T = 10";
    s.params = ch;
    s.x_left = 0.0;
    s.length = 50.0;
    s.initial = InitialKind::Peakon;
    s.speed = 1.0;
    s.x0 = 25.0;
    s.has_oracle = false;
    s.t_end = 10.0;
    s.nodes = 4096;
    s.dt = 1e-4;
    s.snapshot_times = {10.0};
    s.alpha_sweep = {1.0, 1.4, 1.7, 2.0};
    out.push_back(s);
  }
  {
    ExperimentSpec s;
    s.name = "ex5-bbm";
    s.description = "BBM solitary wave c_s = 2 from x0 = -60 on [-100, 100], T = 50";
    s.params = ModelParams::fbbm(2.0);
    s.x_left = -100.0;
    s.length = 200.0;
    s.initial = InitialKind::BbmSoliton;
    s.speed = 2.0;
    s.x0 = -60.0;
    s.t_end = 50.0;
    s.n_list = {32, 64, 128, 256, 512};
    s.nodes = 512;
    s.snapshot_times = {0.0, 50.0};
    out.push_back(s);
  }
  for (const auto& s : out) s.validate();
  return out;
}

}  // namespace

std::string_view to_string(InitialKind kind) {
  switch (kind) {
    case InitialKind::SmoothProfile: return "smooth-profile";
    case InitialKind::Peakon: return "peakon";
    case InitialKind::PeakonTrain: return "peakon-train";
    case InitialKind::BbmSoliton: return "bbm-soliton";
  }
  return "unknown";
}

InitialKind initial_kind_from_string(std::string_view name) {
  for (InitialKind k : {InitialKind::SmoothProfile, InitialKind::Peakon, InitialKind::PeakonTrain,
                        InitialKind::BbmSoliton}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown initial condition '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const {
  if (name.empty()) throw ConfigError("experiment needs a name");
  try {
    params.validate();
    for (double a : alpha_sweep) {
      ModelParams p = params;
      p.alpha = a;
      p.validate();
    }
  } catch (const ParameterError& e) {
    throw ConfigError(name + ": " + e.what());
  }
  if (!(length > 0.0) || !std::isfinite(x_left)) throw ConfigError(name + ": bad domain");
  if (!(t_end > 0.0)) throw ConfigError(name + ": t_end must be positive");
  if (nodes < 4) throw ConfigError(name + ": need at least 4 nodes");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 4) throw ConfigError(name + ": N_list entries must be >= 4");
    if (i > 0 && n_list[i] != 2 * n_list[i - 1]) {
      throw ConfigError(name + ": N_list entries must double");
    }
  }
  if (dt && !(*dt > 0.0)) throw ConfigError(name + ": dt must be positive");
  if (mask_half_width && !(*mask_half_width >= 0.0)) throw ConfigError(name + ": bad mask");
  if (initial == InitialKind::PeakonTrain && peakons.empty()) {
    throw ConfigError(name + ": peakon train needs at least one peakon");
  }
  if (initial == InitialKind::BbmSoliton && !(speed > 1.0)) {
    throw ConfigError(name + ": solitary wave speed must exceed 1");
  }
  if (initial == InitialKind::SmoothProfile && !(speed > 1.0)) {
    throw ConfigError(name + ": profile speed must exceed 1");
  }
  if (initial == InitialKind::PeakonTrain && has_oracle) {
    throw ConfigError(name + ": peakon trains have no exact solution");
  }
}

const std::vector<ExperimentSpec>& catalog() {
  static const std::vector<ExperimentSpec> entries = build_catalog();
  return entries;
}

const ExperimentSpec& find_experiment(std::string_view name) {
  for (const auto& s : catalog()) {
    if (s.name == name) return s;
  }
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

Solution initial_condition(const ExperimentSpec& spec) {
  if (spec.initial == InitialKind::PeakonTrain) {
    const auto seeds = spec.peakons;
    const double length = spec.length;
    return [seeds, length](double x, double) {
      double sum = 0.0;
      for (const auto& p : seeds) sum += periodized_peakon(x, p.c, p.x, length);
      return sum;
    };
  }
  ExperimentSpec travelling = spec;
  travelling.has_oracle = true;
  return *exact_solution(travelling);
}

std::optional<Solution> exact_solution(const ExperimentSpec& spec) {
  if (!spec.has_oracle) return std::nullopt;
  const double c = spec.speed;
  const double x0 = spec.x0;
  const double length = spec.length;
  switch (spec.initial) {
    case InitialKind::SmoothProfile: {
      auto profile = smooth_profile(c);
      return [profile](double x, double t) { return profile->at(x, t); };
    }
    case InitialKind::Peakon:
      return [=](double x, double t) { return peakon(x, t, c, x0, length); };
    case InitialKind::BbmSoliton:
      return [=](double x, double t) { return bbm_solitary(x, t, c, x0); };
    case InitialKind::PeakonTrain:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<ErrorMask> error_mask(const ExperimentSpec& spec, double t) {
  if (!spec.mask_half_width) return std::nullopt;
  return ErrorMask{spec.x0 + spec.speed * t, *spec.mask_half_width};
}

ErrorPair compute_error(const SpectralField& u, const Solution& oracle, double t,
                        const std::optional<ErrorMask>& mask) {
  const PhysicalField field = to_physical(u);
  const Domain& d = u.domain();
  double sum = 0.0;
  double worst = 0.0;
  int used = 0;
  for (int j = 0; j < field.size(); ++j) {
    const double x = field.x(j);
    if (mask && periodic_distance(x, mask->center, d.length()) <= mask->half_width) continue;
    const double e = field[j] - oracle(x, t);
    sum += e * e;
    worst = std::max(worst, std::abs(e));
    ++used;
  }
  if (used == 0) throw DomainError("error mask excludes every grid node");
  return {std::sqrt(sum * d.length() / field.size()), worst};
}

void fill_orders(std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].l2_order.reset();
    rows[i].linf_order.reset();
    if (i == 0 || rows[i].failed || rows[i - 1].failed) continue;
    rows[i].l2_order = std::log2(rows[i - 1].l2_error / rows[i].l2_error);
    rows[i].linf_order = std::log2(rows[i - 1].linf_error / rows[i].linf_error);
  }
}

std::optional<double> effective_dt(const ExperimentSpec& spec, const RunOptions& options) {
  if (options.auto_dt) return std::nullopt;
  if (options.dt) return options.dt;
  return spec.dt;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FRACWAVE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1, omp_get_max_threads());
}

namespace {

ExperimentSpec apply_overrides(const ExperimentSpec& spec, const RunOptions& options) {
  ExperimentSpec s = spec;
  if (options.t_end) s.t_end = *options.t_end;
  if (options.alpha) s.params.alpha = *options.alpha;
  s.validate();
  return s;
}

ConvergenceRow convergence_row(const ExperimentSpec& spec, int n, const RunOptions& options,
                               const Solution& oracle) {
  ConvergenceRow row;
  row.n = n;
  try {
    const Domain domain = Domain::from_nodes(spec.x_left, spec.length, n);
    const SpectralField u0 = sample_and_transform(domain, [&](double x) { return oracle(x, 0.0); });
    IntegrationConfig cfg{spec.t_end, effective_dt(spec, options), options.sample_every,
                          options.filter};
    const IntegrationResult result = integrate(u0, cfg, spec.params);
    row.dt = result.plan.dt;
    row.steps = result.plan.steps;
    const ErrorPair masked =
        compute_error(result.state, oracle, spec.t_end, error_mask(spec, spec.t_end));
    row.l2_error = masked.l2;
    row.linf_error = masked.linf;
    if (spec.mask_half_width) row.unmasked = compute_error(result.state, oracle, spec.t_end);
  } catch (const Error& e) {
    row.failed = true;
    row.blew_up = dynamic_cast<const BlowUpError*>(&e) != nullptr;
    row.failure = e.what();
    row.l2_error = row.linf_error = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

}  // namespace

std::vector<ConvergenceRow> run_convergence(const ExperimentSpec& base, const RunOptions& options) {
  const ExperimentSpec spec = apply_overrides(base, options);
  const auto oracle = exact_solution(spec);
  if (!oracle) throw ConfigError(spec.name + " has no exact solution; convergence undefined");
  if (spec.n_list.empty()) throw ConfigError(spec.name + " has no N_list");

  const int count = static_cast<int>(spec.n_list.size());
  std::vector<ConvergenceRow> rows(static_cast<std::size_t>(count));
  const int threads = std::min(resolve_threads(options.threads), count);
  // Largest rows first so the longest run starts immediately.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = count - 1; i >= 0; --i) {
    rows[static_cast<std::size_t>(i)] =
        convergence_row(spec, spec.n_list[static_cast<std::size_t>(i)], options, *oracle);
  }
  fill_orders(rows);
  return rows;
}

SingleRun run_single(const ExperimentSpec& base, int nodes, const RunOptions& options) {
  const ExperimentSpec spec = apply_overrides(base, options);
  const Domain domain = Domain::from_nodes(spec.x_left, spec.length, nodes);
  const Solution u0 = initial_condition(spec);
  const auto oracle = exact_solution(spec);

  SingleRun run{.nodes = nodes,
                .alpha = spec.params.alpha,
                .t_end = spec.t_end,
                .state = sample_and_transform(domain, [&](double x) { return u0(x, 0.0); }),
                .diagnostics = {},
                .error = {},
                .unmasked_error = {},
                .snapshots = {}};

  auto take_snapshot = [&](double t) {
    const PhysicalField f = to_physical(run.state);
    Snapshot snap{t, {}, {}};
    snap.x.reserve(static_cast<std::size_t>(f.size()));
    snap.u.assign(f.samples().begin(), f.samples().end());
    for (int j = 0; j < f.size(); ++j) snap.x.push_back(f.x(j));
    run.snapshots.push_back(std::move(snap));
  };

  std::vector<double> stops;
  for (double t : spec.snapshot_times) {
    if (t > 0.0 && t < spec.t_end) stops.push_back(t);
  }
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  stops.push_back(spec.t_end);
  const bool wants_initial =
      std::find(spec.snapshot_times.begin(), spec.snapshot_times.end(), 0.0) !=
      spec.snapshot_times.end();
  const bool wants_final = std::any_of(spec.snapshot_times.begin(), spec.snapshot_times.end(),
                                       [&](double t) { return t >= spec.t_end; });

  if (wants_initial) take_snapshot(0.0);
  run.diagnostics.record(0.0, run.state, spec.params.alpha);
  double t = 0.0;
  for (double stop : stops) {
    IntegrationConfig cfg{stop - t, effective_dt(spec, options), options.sample_every,
                          options.filter};
    IntegrationResult seg = integrate(run.state, cfg, spec.params, t);
    run.state = std::move(seg.state);
    run.diagnostics.append(seg.diagnostics);
    run.dt = seg.plan.dt;
    run.steps += seg.plan.steps;
    t = stop;
    if (stop < spec.t_end || wants_final) take_snapshot(stop);
  }
  if (oracle) {
    run.error = compute_error(run.state, *oracle, spec.t_end, error_mask(spec, spec.t_end));
    if (spec.mask_half_width) run.unmasked_error = compute_error(run.state, *oracle, spec.t_end);
  }
  return run;
}

std::vector<SingleRun> run_sweep(const ExperimentSpec& spec, int nodes, const RunOptions& options) {
  std::vector<double> alphas = spec.alpha_sweep;
  if (options.alpha || alphas.empty()) alphas = {options.alpha.value_or(spec.params.alpha)};
  const int count = static_cast<int>(alphas.size());
  std::vector<std::optional<SingleRun>> runs(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  const int threads = std::min(resolve_threads(options.threads), count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      RunOptions o = options;
      o.alpha = alphas[idx];
      runs[idx].emplace(run_single(spec, nodes, o));
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<SingleRun> out;
  out.reserve(runs.size());
  for (auto& r : runs) out.push_back(std::move(*r));
  return out;
}

}  // namespace fracwave
