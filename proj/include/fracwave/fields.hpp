#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fracwave/domain.hpp"

namespace fracwave {

using Complex = std::complex<double>;

/// Mean-normalized Fourier coefficients c_k, k = -N..N, of a periodic
/// function on `domain`:  c_k = (1/L) * integral of u(x) exp(-i kappa_k x).
/// Real fields carry Hermitian symmetry c_{-k} = conj(c_k).
class SpectralField {
 public:
  /// Zero field.
  explicit SpectralField(const Domain& domain);

  /// Takes 2N+1 coefficients ordered k = -N..N.
  SpectralField(const Domain& domain, std::vector<Complex> coeffs);

  const Domain& domain() const noexcept { return domain_; }
  int modes() const noexcept { return domain_.modes(); }

  Complex& operator[](int k) { return coeffs_[static_cast<std::size_t>(k + domain_.modes())]; }
  const Complex& operator[](int k) const {
    return coeffs_[static_cast<std::size_t>(k + domain_.modes())];
  }

  /// Coefficients ordered k = -N..N.
  std::span<Complex> coeffs() noexcept { return coeffs_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// max_k |c_{-k} - conj(c_k)| <= rtol * max_k |c_k|.
  bool is_hermitian(double rtol = 1e-12) const;

  /// Largest coefficient magnitude.
  double max_abs() const;

  /// Enforce exact Hermitian symmetry by averaging each +-k pair.
  void symmetrize();

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

 private:
  Domain domain_;
  std::vector<Complex> coeffs_;
};

/// Real samples u(x_j) at x_j = x_left + j*L/M, j = 0..M-1. The sample count
/// M is independent of the domain's dealiasing grid.
class PhysicalField {
 public:
  /// Rejects NaN and Inf samples.
  PhysicalField(const Domain& domain, std::vector<double> samples);

  const Domain& domain() const noexcept { return domain_; }
  int size() const noexcept { return static_cast<int>(samples_.size()); }
  double x(int j) const noexcept { return domain_.node(j, size()); }
  double operator[](int j) const { return samples_[static_cast<std::size_t>(j)]; }
  std::span<const double> samples() const noexcept { return samples_; }

 private:
  Domain domain_;
  std::vector<double> samples_;
};

/// Throws DomainError unless both fields live on the same interval with the
/// same mode count.
void require_compatible(const SpectralField& a, const SpectralField& b);

}  // namespace fracwave
