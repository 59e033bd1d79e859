#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fracwave/model.hpp"

namespace fracwave::verify {

enum class Level { Quick, Full };

struct Options {
  int trials = 100;
  std::uint64_t seed = 0x5eed'f00dULL;
  /// Test hook: evaluate products on a 2N+1 grid instead of the dealiasing
  /// grid. The product-oracle check must then fail.
  bool tamper_dealias_pad = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest observed violation measure
  double tolerance = 0.0;  // threshold the measure is compared against
  std::string witness;     // inputs of the worst case
  double seconds = 0.0;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Operator identities of the fractional Laplacian on random real fields with
// N <= 16, alpha in {1, 1.5, 2}, on [-pi, pi] and [0, 50].
CheckResult symmetry(const Options& options);                  // (D^a f, g) = (f, D^a g)
CheckResult orthogonality(const Options& options);             // (D^a f_x, f) = 0
CheckResult semigroup(const Options& options);                 // D^a D^b = D^{a+b}
CheckResult projection_commutation(const Options& options);    // P_N D^a = D^a P_N
CheckResult bernstein(const Options& options);                 // |v|_inf <= sqrt((2N+1)/L) |v|
CheckResult product_estimate(const Options& options);          // norm form, C = max(1, 2^{a-1})

// Oracle equivalence for N <= 8.
CheckResult product_oracle(const Options& options);            // dealiased product == convolution
CheckResult rhs_oracle(const Options& options);                // pseudospectral rhs == direct sums
CheckResult rhs_hermitian(const Options& options);

// Semi-discrete conservation: mass and energy rates of rhs(U) vanish.
CheckResult conservation_rates(const Options& options);

// Full level only.
CheckResult spectral_decay(const Options& options);            // 2^{-|k|} tail halves per mode
CheckResult transform_round_trip(const Options& options);
CheckResult rk4_local_order(const Options& options);           // slope 5 of one-step error
CheckResult rk4_global_order(const Options& options);          // slope 4 vs dt/8 reference

/// Parameter presets exercised by the model-level checks.
std::vector<std::pair<std::string, ModelParams>> presets();

Report run(Level level, const Options& options);

/// One line per check plus a summary line.
void print(std::ostream& out, const Report& report);

/// Least-squares slope of log(err) against log(dt).
double log_log_slope(const std::vector<double>& dt, const std::vector<double>& err);

}  // namespace fracwave::verify
