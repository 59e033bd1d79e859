#include "fracwave/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "fracwave/error.hpp"
#include "fracwave/kernels.hpp"

namespace fracwave {

StepPlan plan_steps(const IntegrationConfig& config, const Domain& domain) {
  if (!(config.t_end > 0.0) || !std::isfinite(config.t_end)) {
    throw ParameterError("t_end must be finite and positive");
  }
  double dt = config.dt ? *config.dt : 0.001 / domain.k_max();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ParameterError("dt must be finite and positive");
  if (dt > config.t_end) throw ParameterError("dt exceeds t_end");

  const double ratio = config.t_end / dt;
  if (ratio > static_cast<double>(kMaxSteps)) {
    throw ParameterError("integration would need more than 1e9 steps");
  }
  // Tolerate t_end/dt landing a hair above an integer.
  auto steps = static_cast<std::int64_t>(std::ceil(ratio * (1.0 - 1e-12)));
  if (steps < 1) steps = 1;

  StepPlan plan;
  plan.steps = steps;
  plan.dt = config.t_end / static_cast<double>(steps);
  if (config.sample_every < 0) throw ParameterError("sample_every must be >= 0");
  plan.sample_every = config.sample_every > 0
                          ? config.sample_every
                          : std::max<std::int64_t>(1, std::llround(0.01 * static_cast<double>(steps)));
  return plan;
}

Rk4Stepper::Rk4Stepper(const Domain& domain, const ModelParams& params)
    : op_(domain, params), k1_(domain), k2_(domain), k3_(domain), k4_(domain), stage_(domain) {}

double Rk4Stepper::step(SpectralField& u, double dt) {
  op_.evaluate(u, k1_);
  const double linf = op_.last_linf();
  kernels::axpy(u.coeffs(), 0.5 * dt, k1_.coeffs(), stage_.coeffs());
  op_.evaluate(stage_, k2_);
  kernels::axpy(u.coeffs(), 0.5 * dt, k2_.coeffs(), stage_.coeffs());
  op_.evaluate(stage_, k3_);
  kernels::axpy(u.coeffs(), dt, k3_.coeffs(), stage_.coeffs());
  op_.evaluate(stage_, k4_);

  kernels::accumulate(u.coeffs(), dt / 6.0, k1_.coeffs());
  kernels::accumulate(u.coeffs(), dt / 3.0, k2_.coeffs());
  kernels::accumulate(u.coeffs(), dt / 3.0, k3_.coeffs());
  kernels::accumulate(u.coeffs(), dt / 6.0, k4_.coeffs());
  return linf;
}

SpectralField rk4_step(const SpectralField& u, double dt, const ModelParams& params) {
  if (!(dt > 0.0)) throw ParameterError("dt must be positive");
  Rk4Stepper stepper(u.domain(), params);
  SpectralField out = u;
  stepper.step(out, dt);
  return out;
}

void apply_exponential_filter(SpectralField& u) {
  const int n = u.modes();
  for (int k = -n; k <= n; ++k) {
    const double r = static_cast<double>(std::abs(k)) / n;
    u[k] *= std::exp(-36.0 * std::pow(r, 36.0));
  }
}

namespace {

[[noreturn]] void blow_up(const std::string& why, double t) {
  std::ostringstream msg;
  msg << why << " (last good time t = " << t << ")";
  throw BlowUpError(msg.str(), t);
}

}  // namespace

IntegrationResult integrate(const SpectralField& u0, const IntegrationConfig& config,
                            const ModelParams& params, double t0) {
  if (!u0.is_hermitian(1e-12)) throw SymmetryError("initial state is not a real field");
  const StepPlan plan = plan_steps(config, u0.domain());
  Rk4Stepper stepper(u0.domain(), params);

  IntegrationResult result{u0, Diagnostics{}, plan};
  SpectralField& u = result.state;
  result.diagnostics.record(t0, u, params.alpha);

  // Latest time whose state was seen finite and bounded.
  double last_good = t0;
  for (std::int64_t n = 0; n < plan.steps; ++n) {
    const double t = t0 + static_cast<double>(n) * plan.dt;
    double linf = 0.0;
    try {
      linf = stepper.step(u, plan.dt);
    } catch (const BlowUpError& e) {
      blow_up(e.what(), last_good);
    }
    if (linf > kBlowUpAmplitude) blow_up("amplitude exceeded 1e6", last_good);
    last_good = t;
    if (config.filter) apply_exponential_filter(u);

    const std::int64_t done = n + 1;
    if (done % plan.sample_every == 0 || done == plan.steps) {
      const double t_next = t0 + static_cast<double>(done) * plan.dt;
      const auto c = u.coeffs();
      if (!std::all_of(c.begin(), c.end(), [](Complex z) { return std::isfinite(std::norm(z)); })) {
        blow_up("solution diverged", last_good);
      }
      result.diagnostics.record(t_next, u, params.alpha);
      const double last = result.diagnostics.linf.back();
      if (!std::isfinite(last) || last > kBlowUpAmplitude) blow_up("solution diverged", last_good);
      last_good = t_next;
    }
  }
  return result;
}

}  // namespace fracwave
