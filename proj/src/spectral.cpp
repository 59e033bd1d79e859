#include "fracwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracwave/error.hpp"
#include "fracwave/fft.hpp"
#include "fracwave/kernels.hpp"

namespace fracwave {
namespace {

void require_grid(int samples, int modes) {
  if (samples < 2 * modes + 1) {
    throw ResolutionError(std::to_string(samples) + " samples cannot resolve " +
                          std::to_string(modes) + " modes (need >= " +
                          std::to_string(2 * modes + 1) + ")");
  }
}

void require_hermitian(const SpectralField& f) {
  if (!f.is_hermitian(1e-12)) {
    throw SymmetryError("coefficients are not Hermitian-symmetric; field is not real");
  }
}

// Half spectrum k = 0..N zero-padded to the transform length, in the frame
// where the grid starts at x = 0.
void load_half_spectrum(const SpectralField& f, std::span<Complex> half, bool shift_phase) {
  std::fill(half.begin(), half.end(), Complex{});
  const Domain& d = f.domain();
  for (int k = 0; k <= f.modes(); ++k) {
    Complex c = f[k];
    if (shift_phase && d.x_left() != 0.0) c *= std::polar(1.0, d.wavenumber(k) * d.x_left());
    half[static_cast<std::size_t>(k)] = c;
  }
}

std::vector<double> synthesize(const SpectralField& f, int samples, bool shift_phase) {
  auto fft = shared_fft(samples);
  std::vector<Complex> half(static_cast<std::size_t>(fft->half_size()));
  std::vector<double> out(static_cast<std::size_t>(samples));
  load_half_spectrum(f, half, shift_phase);
  fft->inverse(half, out);
  return out;
}

SpectralField analyze(const Domain& domain, std::span<const double> samples, int modes,
                      bool shift_phase) {
  const int m = static_cast<int>(samples.size());
  auto fft = shared_fft(m);
  std::vector<Complex> half(static_cast<std::size_t>(fft->half_size()));
  fft->forward(samples, half);
  SpectralField out(domain);
  for (int k = 0; k <= modes; ++k) {
    Complex c = half[static_cast<std::size_t>(k)] / static_cast<double>(m);
    if (shift_phase && domain.x_left() != 0.0) {
      c *= std::polar(1.0, -domain.wavenumber(k) * domain.x_left());
    }
    out[k] = c;
    out[-k] = std::conj(c);
  }
  out[0] = Complex(out[0].real(), 0.0);
  return out;
}

}  // namespace

PhysicalField to_physical(const SpectralField& f, int samples) {
  require_grid(samples, f.modes());
  require_hermitian(f);
  return PhysicalField(f.domain(), synthesize(f, samples, true));
}

PhysicalField to_physical(const SpectralField& f) { return to_physical(f, f.domain().grid()); }

SpectralField to_spectral(const PhysicalField& u, int modes) {
  if (modes < 1) throw DomainError("need at least one mode");
  require_grid(u.size(), modes);
  return analyze(u.domain().with_modes(modes), u.samples(), modes, true);
}

SpectralField project(const SpectralField& f, int target) {
  if (target > f.modes()) {
    throw DomainError("cannot project " + std::to_string(f.modes()) + " modes up to " +
                      std::to_string(target));
  }
  SpectralField out(f.domain().with_modes(target));
  for (int k = -target; k <= target; ++k) out[k] = f[k];
  return out;
}

SpectralField frac_laplacian(const SpectralField& f, double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("fractional exponent must be >= 0");
  SpectralField out(f.domain());
  const Domain& d = f.domain();
  for (int k = -f.modes(); k <= f.modes(); ++k) {
    if (k == 0) continue;  // |0|^alpha := 0 for every alpha
    out[k] = std::pow(std::abs(d.wavenumber(k)), alpha) * f[k];
  }
  return out;
}

SpectralField derivative(const SpectralField& f) {
  SpectralField out(f.domain());
  const Domain& d = f.domain();
  for (int k = -f.modes(); k <= f.modes(); ++k) out[k] = Complex(0.0, d.wavenumber(k)) * f[k];
  return out;
}

SpectralField pseudospectral_product(const SpectralField& f, const SpectralField& g, int grid) {
  require_compatible(f, g);
  require_grid(grid, f.modes());
  require_hermitian(f);
  require_hermitian(g);
  // Products commute with translation, so the x_left phase is skipped.
  const std::vector<double> a = synthesize(f, grid, false);
  const std::vector<double> b = synthesize(g, grid, false);
  std::vector<double> ab(a.size());
  kernels::multiply(a, b, ab);
  return analyze(f.domain(), ab, f.modes(), false);
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
  return pseudospectral_product(f, g, f.domain().grid());
}

SpectralField convolution_oracle(const SpectralField& f, const SpectralField& g) {
  require_compatible(f, g);
  const int n = f.modes();
  SpectralField out(f.domain());
  for (int m = -n; m <= n; ++m) {
    Complex sum{};
    const int k_lo = std::max(-n, m - n);
    const int k_hi = std::min(n, m + n);
    for (int k = k_lo; k <= k_hi; ++k) sum += f[k] * g[m - k];
    out[m] = sum;
  }
  return out;
}

namespace {

template <typename Weight>
double weighted_norm(const SpectralField& f, Weight&& weight) {
  const Domain& d = f.domain();
  double sum = 0.0;
  for (int k = -f.modes(); k <= f.modes(); ++k) sum += weight(d.wavenumber(k)) * std::norm(f[k]);
  return std::sqrt(d.length() * sum);
}

}  // namespace

double l2_norm(const SpectralField& f) {
  return weighted_norm(f, [](double) { return 1.0; });
}

double linf_norm(const PhysicalField& u) { return kernels::max_abs(u.samples()); }

double sobolev_norm(const SpectralField& f, double r) {
  if (!(r >= 0.0)) throw DomainError("Sobolev index must be >= 0");
  return weighted_norm(f, [r](double kappa) { return std::pow(1.0 + kappa * kappa, r); });
}

double h_alpha_half_seminorm(const SpectralField& f, double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("fractional exponent must be >= 0");
  return weighted_norm(f, [alpha](double kappa) {
    return kappa == 0.0 ? 0.0 : std::pow(std::abs(kappa), alpha);
  });
}

Complex inner_product(const SpectralField& f, const SpectralField& g) {
  require_compatible(f, g);
  Complex sum{};
  for (int k = -f.modes(); k <= f.modes(); ++k) sum += f[k] * std::conj(g[k]);
  return f.domain().length() * sum;
}

double quadrature_inner_product(const SpectralField& f, const SpectralField& g) {
  require_compatible(f, g);
  const PhysicalField a = to_physical(f);
  const PhysicalField b = to_physical(g);
  double sum = 0.0;
  for (int j = 0; j < a.size(); ++j) sum += a[j] * b[j];
  return sum * f.domain().length() / a.size();
}

}  // namespace fracwave
