#pragma once

#include <memory>
#include <vector>

#include "fracwave/fft.hpp"
#include "fracwave/fields.hpp"

namespace fracwave {

/// Coefficients of the fractional Camassa-Holm family
///   u_t + (kappa1 u + 3/2 gamma u^2)_x + D^alpha u_t
///       = -kappa2 [ 2 D^alpha(u u_x) + u D^alpha u_x ].
struct ModelParams {
  double kappa1 = 0.0;
  double gamma = 1.0;
  double kappa2 = 0.0;
  double alpha = 2.0;

  /// ParameterError unless alpha in [1, 2] and gamma > 0, all finite.
  void validate() const;

  /// Classical Camassa-Holm without linear drift: (0, 1, 1/3, 2).
  static ModelParams camassa_holm();
  /// Fractional BBM: (1, 1/3, 0, alpha).
  static ModelParams fbbm(double alpha);
  /// u_t + 2 omega u_x + 3 u u_x - u_xxt = 2 u_x u_xx + u u_xxx: (2 omega, 1, 1/3, 2).
  static ModelParams classical_ch(double omega);

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Sign in front of i*kappa*F in the coefficient equation. Fixed by the
/// linear dispersion relation of u_t + kappa1 u_x + D^alpha u_t = 0, whose
/// modes evolve as exp(-i kappa1 kappa t / (1 + |kappa|^alpha)).
inline constexpr double kFluxSign = -1.0;

/// Semi-discrete right-hand side dU/dt of the Fourier-Galerkin system,
/// evaluated pseudospectrally on the domain's dealiasing grid. Owns its
/// multiplier tables and scratch buffers; one instance per thread.
class FchOperator {
 public:
  FchOperator(const Domain& domain, const ModelParams& params);

  const Domain& domain() const noexcept { return domain_; }
  const ModelParams& params() const noexcept { return params_; }

  /// dudt <- g(u). Throws BlowUpError if a NaN appears.
  void evaluate(const SpectralField& u, SpectralField& dudt);

  /// max |u_N| on the grid for the input of the most recent evaluate().
  double last_linf() const noexcept { return last_linf_; }

 private:
  Domain domain_;
  ModelParams params_;
  std::shared_ptr<const RealFft> fft_;
  std::vector<double> wavenumber_;  // kappa_k, k = 0..N
  std::vector<double> dispersion_;  // |kappa_k|^alpha
  std::vector<double> inv_mass_;    // 1 / (1 + |kappa_k|^alpha)
  std::vector<Complex> half_;
  std::vector<Complex> square_hat_;
  std::vector<Complex> mixed_hat_;
  std::vector<double> u_;
  std::vector<double> w_;
  std::vector<double> prod_;
  double last_linf_ = 0.0;
};

/// One-shot right-hand side.
SpectralField rhs(const SpectralField& u, const ModelParams& params);

/// Right-hand side assembled from the direct convolution sums; O(N^2) serial
/// reference for rhs().
SpectralField rhs_convolution(const SpectralField& u, const ModelParams& params);

/// integral of u_N = L * Re(c_0).
double mass(const SpectralField& u);

/// integral of u_N^2 + |D^{alpha/2} u_N|^2 = L * sum (1 + |kappa_k|^alpha) |c_k|^2.
double energy(const SpectralField& u, double alpha);

/// d/dt mass along the direction dudt.
double mass_rate(const SpectralField& dudt);

/// d/dt energy along dudt: 2 L sum (1 + |kappa_k|^alpha) Re(conj(c_k) dudt_k).
double energy_rate(const SpectralField& u, const SpectralField& dudt, double alpha);

/// Sampled conserved quantities and norms.
struct Diagnostics {
  std::vector<double> times;
  std::vector<double> mass;
  std::vector<double> energy;
  std::vector<double> l2;
  std::vector<double> linf;

  std::size_t size() const noexcept { return times.size(); }
  void record(double t, const SpectralField& u, double alpha);
  /// Appends `other`, skipping its first sample if it repeats our last time.
  void append(const Diagnostics& other);

  double max_relative_mass_drift() const;
  double max_relative_energy_drift() const;
};

}  // namespace fracwave
