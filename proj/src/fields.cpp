#include "fracwave/fields.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracwave/error.hpp"

namespace fracwave {

SpectralField::SpectralField(const Domain& domain)
    : domain_(domain), coeffs_(static_cast<std::size_t>(domain.coefficient_count())) {}

SpectralField::SpectralField(const Domain& domain, std::vector<Complex> coeffs)
    : domain_(domain), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(domain_.coefficient_count())) {
    throw DomainError("expected " + std::to_string(domain_.coefficient_count()) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool SpectralField::is_hermitian(double rtol) const {
  const int n = modes();
  const double tol = rtol * max_abs();
  for (int k = 0; k <= n; ++k) {
    if (std::abs((*this)[-k] - std::conj((*this)[k])) > tol) return false;
  }
  return true;
}

void SpectralField::symmetrize() {
  const int n = modes();
  (*this)[0] = Complex((*this)[0].real(), 0.0);
  for (int k = 1; k <= n; ++k) {
    const Complex avg = 0.5 * ((*this)[k] + std::conj((*this)[-k]));
    (*this)[k] = avg;
    (*this)[-k] = std::conj(avg);
  }
}

void require_compatible(const SpectralField& a, const SpectralField& b) {
  if (!a.domain().same_interval(b.domain()) || a.modes() != b.modes()) {
    throw DomainError("spectral fields live on different domains");
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (Complex& c : coeffs_) c *= s;
  return *this;
}

PhysicalField::PhysicalField(const Domain& domain, std::vector<double> samples)
    : domain_(domain), samples_(std::move(samples)) {
  if (samples_.empty()) throw DomainError("physical field needs at least one sample");
  for (std::size_t j = 0; j < samples_.size(); ++j) {
    if (!std::isfinite(samples_[j])) {
      throw DomainError("non-finite sample at index " + std::to_string(j));
    }
  }
}

}  // namespace fracwave
