#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracwave/integrator.hpp"
#include "fracwave/model.hpp"

namespace fracwave {

enum class InitialKind {
  SmoothProfile,  // tiled Camassa-Holm traveling wave, speed = c
  Peakon,         // c exp(-|x - x0|)
  PeakonTrain,    // sum of periodized peakons
  BbmSoliton,     // sech^2 solitary wave, speed = c_s
};

std::string_view to_string(InitialKind kind);
InitialKind initial_kind_from_string(std::string_view name);

struct PeakonSeed {
  double c = 1.0;
  double x = 0.0;
};

/// A reproducible numerical experiment. Resolutions are counted in grid
/// nodes: a run with `n` nodes keeps modes |k| <= (n - 1) / 3 and evaluates
/// products and errors on those n nodes.
struct ExperimentSpec {
  std::string name;
  std::string description;
  ModelParams params;
  double x_left = 0.0;
  double length = 1.0;
  InitialKind initial = InitialKind::Peakon;
  double speed = 1.0;  // c or c_s; unused for peakon trains
  double x0 = 0.0;
  std::vector<PeakonSeed> peakons;
  bool has_oracle = true;
  double t_end = 1.0;
  std::vector<int> n_list;  // convergence rows, each double the previous
  int nodes = 256;          // single-run resolution
  std::optional<double> dt; // unset: automatic 0.001 / k_max
  std::optional<double> mask_half_width;
  std::vector<double> snapshot_times;
  std::vector<double> alpha_sweep;

  /// ConfigError on inconsistent fields.
  void validate() const;
};

/// Built-in experiments: ex1-smooth, ex2-peakon, ex3-two-peakon,
/// ex3-three-peakon, ex4-alpha-sweep, ex5-bbm.
const std::vector<ExperimentSpec>& catalog();

/// ConfigError for unknown names.
const ExperimentSpec& find_experiment(std::string_view name);

using Solution = std::function<double(double x, double t)>;

/// u0(x) as Solution evaluated at t = 0.
Solution initial_condition(const ExperimentSpec& spec);

/// Exact solution u(x, t) when one is known.
std::optional<Solution> exact_solution(const ExperimentSpec& spec);

/// Points within `half_width` (periodic distance) of `center` are excluded.
struct ErrorMask {
  double center = 0.0;
  double half_width = 0.0;
};

std::optional<ErrorMask> error_mask(const ExperimentSpec& spec, double t);

struct ErrorPair {
  double l2 = 0.0;
  double linf = 0.0;
};

/// Errors against `oracle` on the field's grid; l2 uses quadrature weight L/M.
/// Throws DomainError if the mask removes every node.
ErrorPair compute_error(const SpectralField& u, const Solution& oracle, double t,
                        const std::optional<ErrorMask>& mask = std::nullopt);

struct ConvergenceRow {
  int n = 0;
  double l2_error = 0.0;
  std::optional<double> l2_order;
  double linf_error = 0.0;
  std::optional<double> linf_order;
  std::optional<ErrorPair> unmasked;
  bool failed = false;
  bool blew_up = false;
  std::string failure;
  double dt = 0.0;
  std::int64_t steps = 0;
};

/// order_i = log2(e_{i-1} / e_i) between consecutive successful rows.
void fill_orders(std::vector<ConvergenceRow>& rows);

struct RunOptions {
  std::optional<double> dt;      // overrides the spec
  bool auto_dt = false;          // force 0.001 / k_max regardless of spec
  std::optional<double> t_end;
  std::optional<double> alpha;
  bool filter = false;
  std::int64_t sample_every = 0;
  int threads = 0;               // 0: FRACWAVE_THREADS or the OpenMP default
};

/// Step size policy after options are applied; unset means automatic.
std::optional<double> effective_dt(const ExperimentSpec& spec, const RunOptions& options);

/// Thread count for independent runs.
int resolve_threads(int requested);

/// Rows run in parallel; the result is ordered like spec.n_list.
std::vector<ConvergenceRow> run_convergence(const ExperimentSpec& spec, const RunOptions& options);

struct Snapshot {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> u;
};

struct SingleRun {
  int nodes = 0;
  double alpha = 0.0;
  double t_end = 0.0;
  double dt = 0.0;
  std::int64_t steps = 0;
  SpectralField state;
  Diagnostics diagnostics;
  std::optional<ErrorPair> error;
  std::optional<ErrorPair> unmasked_error;
  std::vector<Snapshot> snapshots;
};

/// One resolution, snapshots at spec.snapshot_times (clipped to t_end).
/// BlowUpError propagates with its time stamp.
SingleRun run_single(const ExperimentSpec& spec, int nodes, const RunOptions& options);

/// run_single for each alpha of spec.alpha_sweep (or the single override),
/// in parallel, ordered like the sweep.
std::vector<SingleRun> run_sweep(const ExperimentSpec& spec, int nodes, const RunOptions& options);

}  // namespace fracwave
