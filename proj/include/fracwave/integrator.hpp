#pragma once

#include <cstdint>
#include <optional>

#include "fracwave/model.hpp"

namespace fracwave {

struct IntegrationConfig {
  double t_end = 1.0;
  /// Unset: dt = 0.001 / k_max with k_max = 2*pi*N/L.
  std::optional<double> dt;
  /// Steps between diagnostic samples; 0 picks max(1, round(0.01 * t_end / dt)).
  std::int64_t sample_every = 0;
  /// Exponential filter exp(-36 (|k|/N)^36) after every step.
  bool filter = false;
};

/// Uniform step sequence covering [0, t_end] exactly.
struct StepPlan {
  double dt = 0.0;
  std::int64_t steps = 0;
  std::int64_t sample_every = 1;
};

inline constexpr std::int64_t kMaxSteps = 1'000'000'000;
inline constexpr double kBlowUpAmplitude = 1e6;

/// The requested (or automatic) step shrunk so that t_end / dt is an integer.
StepPlan plan_steps(const IntegrationConfig& config, const Domain& domain);

/// Classical four-stage Runge-Kutta with reusable stage storage.
class Rk4Stepper {
 public:
  Rk4Stepper(const Domain& domain, const ModelParams& params);

  /// Advances u in place by dt. Returns max |u| on the grid at the start of
  /// the step.
  double step(SpectralField& u, double dt);

  FchOperator& op() noexcept { return op_; }

 private:
  FchOperator op_;
  SpectralField k1_, k2_, k3_, k4_, stage_;
};

SpectralField rk4_step(const SpectralField& u, double dt, const ModelParams& params);

struct IntegrationResult {
  SpectralField state;
  Diagnostics diagnostics;
  StepPlan plan;
};

/// Integrates from t0 to t0 + t_end. Diagnostics include the first and the
/// last time. BlowUpError carries the last time with a finite, bounded state.
IntegrationResult integrate(const SpectralField& u0, const IntegrationConfig& config,
                            const ModelParams& params, double t0 = 0.0);

/// Applies exp(-36 (|k|/N)^36) to every mode.
void apply_exponential_filter(SpectralField& u);

}  // namespace fracwave
