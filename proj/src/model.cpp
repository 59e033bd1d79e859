#include "fracwave/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracwave/error.hpp"
#include "fracwave/kernels.hpp"
#include "fracwave/spectral.hpp"

namespace fracwave {

void ModelParams::validate() const {
  if (!std::isfinite(kappa1) || !std::isfinite(kappa2) || !std::isfinite(gamma) ||
      !std::isfinite(alpha)) {
    throw ParameterError("model parameters must be finite");
  }
  if (!(gamma > 0.0)) throw ParameterError("gamma must be > 0");
  if (alpha < 1.0 || alpha > 2.0) {
    throw ParameterError("alpha must lie in [1, 2], got " + std::to_string(alpha));
  }
}

ModelParams ModelParams::camassa_holm() { return {0.0, 1.0, 1.0 / 3.0, 2.0}; }
ModelParams ModelParams::fbbm(double alpha) { return {1.0, 1.0 / 3.0, 0.0, alpha}; }
ModelParams ModelParams::classical_ch(double omega) { return {2.0 * omega, 1.0, 1.0 / 3.0, 2.0}; }

FchOperator::FchOperator(const Domain& domain, const ModelParams& params)
    : domain_(domain), params_(params), fft_(shared_fft(domain.grid())) {
  params_.validate();
  const auto n = static_cast<std::size_t>(domain.modes() + 1);
  wavenumber_.resize(n);
  dispersion_.resize(n);
  inv_mass_.resize(n);
  for (int k = 0; k <= domain.modes(); ++k) {
    const double kappa = domain.wavenumber(k);
    const double d = k == 0 ? 0.0 : std::pow(std::abs(kappa), params_.alpha);
    wavenumber_[static_cast<std::size_t>(k)] = kappa;
    dispersion_[static_cast<std::size_t>(k)] = d;
    inv_mass_[static_cast<std::size_t>(k)] = 1.0 / (1.0 + d);
  }
  const auto half = static_cast<std::size_t>(fft_->half_size());
  const auto m = static_cast<std::size_t>(domain.grid());
  half_.resize(half);
  square_hat_.resize(half);
  mixed_hat_.resize(half);
  u_.resize(m);
  w_.resize(m);
  prod_.resize(m);
}

void FchOperator::evaluate(const SpectralField& u, SpectralField& dudt) {
  require_compatible(u, dudt);
  if (u.modes() != domain_.modes() || !u.domain().same_interval(domain_)) {
    throw DomainError("field does not match the operator's domain");
  }
  const int n = domain_.modes();
  const double inv_m = 1.0 / domain_.grid();
  const bool dispersive_nonlinearity = params_.kappa2 != 0.0;

  // The right-hand side commutes with translation, so coefficients are used
  // as if the grid started at x = 0.
  std::fill(half_.begin(), half_.end(), Complex{});
  for (int k = 0; k <= n; ++k) half_[static_cast<std::size_t>(k)] = u[k];
  fft_->inverse(half_, u_);

  last_linf_ = kernels::max_abs(u_);
  if (std::isnan(last_linf_)) throw BlowUpError("NaN in solution");

  kernels::square(u_, prod_);
  fft_->forward(prod_, square_hat_);

  if (dispersive_nonlinearity) {
    std::fill(half_.begin(), half_.end(), Complex{});
    for (int k = 0; k <= n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      half_[i] = Complex(0.0, wavenumber_[i] * dispersion_[i]) * u[k];
    }
    fft_->inverse(half_, w_);
    kernels::multiply(u_, w_, prod_);
    fft_->forward(prod_, mixed_hat_);
  }

  const double k1 = params_.kappa1;
  const double g15 = 1.5 * params_.gamma;
  const double k2 = params_.kappa2;
  bool finite = true;
  for (int k = 0; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const Complex ikappa(0.0, wavenumber_[i]);
    const Complex sq = square_hat_[i] * inv_m;            // (u^2)^_k
    const Complex flux = k1 * u[k] + g15 * sq;             // f(u)^_k
    Complex value = kFluxSign * ikappa * flux;
    if (dispersive_nonlinearity) {
      const Complex advect = 0.5 * ikappa * sq;            // (u u_x)^_k = (i kappa/2)(u^2)^_k
      const Complex mixed = mixed_hat_[i] * inv_m;         // (u D^alpha u_x)^_k
      value -= k2 * (2.0 * dispersion_[i] * advect + mixed);
    }
    value *= inv_mass_[i];
    finite = finite && std::isfinite(value.real()) && std::isfinite(value.imag());
    dudt[k] = value;
    if (k != 0) dudt[-k] = std::conj(value);
  }
  if (!finite) throw BlowUpError("NaN or Inf in right-hand side");
}

SpectralField rhs(const SpectralField& u, const ModelParams& params) {
  FchOperator op(u.domain(), params);
  SpectralField out(u.domain());
  op.evaluate(u, out);
  return out;
}

SpectralField rhs_convolution(const SpectralField& u, const ModelParams& params) {
  params.validate();
  const Domain& d = u.domain();
  const int n = u.modes();
  auto disp = [&](int k) { return k == 0 ? 0.0 : std::pow(std::abs(d.wavenumber(k)), params.alpha); };

  SpectralField out(d);
  for (int m = -n; m <= n; ++m) {
    Complex quad{}, advect{}, mixed{};
    for (int k = std::max(-n, m - n); k <= std::min(n, m + n); ++k) {
      const int l = m - k;
      const Complex pair = u[k] * u[l];
      const Complex il(0.0, d.wavenumber(l));
      quad += pair;
      advect += il * pair;
      mixed += disp(l) * il * pair;
    }
    const Complex flux = params.kappa1 * u[m] + 1.5 * params.gamma * quad;
    const Complex ikappa(0.0, d.wavenumber(m));
    const Complex value =
        kFluxSign * ikappa * flux - params.kappa2 * (2.0 * disp(m) * advect + mixed);
    out[m] = value / (1.0 + disp(m));
  }
  return out;
}

double mass(const SpectralField& u) { return u.domain().length() * u[0].real(); }

double energy(const SpectralField& u, double alpha) {
  const Domain& d = u.domain();
  double sum = 0.0;
  for (int k = -u.modes(); k <= u.modes(); ++k) {
    const double w = k == 0 ? 1.0 : 1.0 + std::pow(std::abs(d.wavenumber(k)), alpha);
    sum += w * std::norm(u[k]);
  }
  return d.length() * sum;
}

double mass_rate(const SpectralField& dudt) { return dudt.domain().length() * dudt[0].real(); }

double energy_rate(const SpectralField& u, const SpectralField& dudt, double alpha) {
  require_compatible(u, dudt);
  const Domain& d = u.domain();
  double sum = 0.0;
  for (int k = -u.modes(); k <= u.modes(); ++k) {
    const double w = k == 0 ? 1.0 : 1.0 + std::pow(std::abs(d.wavenumber(k)), alpha);
    sum += w * (std::conj(u[k]) * dudt[k]).real();
  }
  return 2.0 * d.length() * sum;
}

void Diagnostics::record(double t, const SpectralField& u, double alpha) {
  times.push_back(t);
  mass.push_back(fracwave::mass(u));
  energy.push_back(fracwave::energy(u, alpha));
  l2.push_back(l2_norm(u));
  linf.push_back(linf_norm(to_physical(u)));
}

void Diagnostics::append(const Diagnostics& other) {
  std::size_t start = 0;
  if (!times.empty() && !other.times.empty() && other.times.front() <= times.back()) start = 1;
  for (std::size_t i = start; i < other.size(); ++i) {
    times.push_back(other.times[i]);
    mass.push_back(other.mass[i]);
    energy.push_back(other.energy[i]);
    l2.push_back(other.l2[i]);
    linf.push_back(other.linf[i]);
  }
}

namespace {

double max_relative_drift(const std::vector<double>& series) {
  if (series.empty()) return 0.0;
  const double ref = series.front();
  const double scale = ref != 0.0 ? std::abs(ref) : 1.0;
  double worst = 0.0;
  for (double v : series) worst = std::max(worst, std::abs(v - ref) / scale);
  return worst;
}

}  // namespace

double Diagnostics::max_relative_mass_drift() const { return max_relative_drift(mass); }
double Diagnostics::max_relative_energy_drift() const { return max_relative_drift(energy); }

}  // namespace fracwave
