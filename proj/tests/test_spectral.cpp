#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracwave/error.hpp"
#include "fracwave/random_fields.hpp"
#include "fracwave/spectral.hpp"

using namespace fracwave;
using std::numbers::pi;

namespace {

// u(x) = sum_k c_k exp(i kappa_k x), summed term by term.
double direct_sum(const SpectralField& f, double x) {
  Complex s{};
  for (int k = -f.modes(); k <= f.modes(); ++k) {
    s += f[k] * std::polar(1.0, f.domain().wavenumber(k) * x);
  }
  return s.real();
}

double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (int k = -a.modes(); k <= a.modes(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

TEST_CASE("forward transform of a hand-made trigonometric polynomial") {
  const Domain d = Domain::padded(0.0, 2.0 * pi, 4);
  const auto f = sample_and_transform(d, [](double x) { return 2.0 + std::cos(3 * x) + 0.5 * std::sin(x); });
  CHECK(std::abs(f[0] - Complex(2.0)) < 1e-14);
  CHECK(std::abs(f[3] - Complex(0.5)) < 1e-14);
  CHECK(std::abs(f[-3] - Complex(0.5)) < 1e-14);
  CHECK(std::abs(f[1] - Complex(0.0, -0.25)) < 1e-14);
  CHECK(std::abs(f[-1] - Complex(0.0, 0.25)) < 1e-14);
  CHECK(std::abs(f[2]) < 1e-14);
}

TEST_CASE("coefficients refer to absolute positions on shifted intervals") {
  const Domain d = Domain::padded(-3.7, 10.0, 6);
  const double kappa = d.wavenumber(2);
  const auto f = sample_and_transform(d, [&](double x) { return std::cos(kappa * x); });
  CHECK(std::abs(f[2] - Complex(0.5)) < 1e-13);
}

TEST_CASE("backward transform agrees with direct summation") {
  std::mt19937_64 rng(5);
  const Domain d = Domain::padded(-1.3, 7.0, 9);
  const auto f = random_real_field(d, rng);
  for (int samples : {19, 28, 64}) {
    const PhysicalField u = to_physical(f, samples);
    for (int j = 0; j < samples; ++j) CHECK(u[j] == doctest::Approx(direct_sum(f, u.x(j))).epsilon(1e-12));
  }
}

TEST_CASE("transforms reject undersized grids and complex data") {
  const Domain d = Domain::padded(0.0, 1.0, 5);
  SpectralField f(d);
  f[1] = f[-1] = 1.0;
  CHECK_THROWS_AS(to_physical(f, 10), ResolutionError);
  f[2] = 1.0;
  CHECK_THROWS_AS(to_physical(f), SymmetryError);
}

TEST_CASE("fractional Laplacian and derivative on single modes") {
  const Domain d = Domain::padded(0.0, 2.0 * pi, 4);
  const auto f = sample_and_transform(d, [](double x) { return 1.0 + std::cos(2 * x); });
  for (double a : {0.0, 1.0, 1.5, 2.0}) {
    const auto g = frac_laplacian(f, a);
    CHECK(g[0] == Complex(0.0));
    CHECK(std::abs(g[2] - std::pow(2.0, a) * 0.5) < 1e-13);
  }
  CHECK_THROWS_AS(frac_laplacian(f, -0.5), DomainError);
  // d/dx cos 2x = -2 sin 2x
  const auto df = to_physical(derivative(f));
  for (int j = 0; j < df.size(); ++j) CHECK(df[j] == doctest::Approx(-2.0 * std::sin(2 * df.x(j))).epsilon(1e-12));
}

TEST_CASE("projection truncates and refuses to grow") {
  std::mt19937_64 rng(9);
  const Domain d = Domain::padded(0.0, 3.0, 6);
  const auto f = random_real_field(d, rng);
  const auto p = project(f, 3);
  CHECK(p.modes() == 3);
  for (int k = -3; k <= 3; ++k) CHECK(p[k] == f[k]);
  CHECK_THROWS_AS(project(f, 7), DomainError);
}

TEST_CASE("norms against closed forms") {
  const Domain d = Domain::padded(0.0, 2.0 * pi, 3);
  const auto u = sample_and_transform(d, [](double x) { return 1.0 + std::cos(x); });
  // integral of (1 + cos x)^2 over a period = 3 pi
  CHECK(l2_norm(u) == doctest::Approx(std::sqrt(3.0 * pi)));
  const auto c = sample_and_transform(d, [](double x) { return std::cos(x); });
  // L sum (1 + k^2)^r |c_k|^2 = 2 pi * 2 * 2^r / 4
  CHECK(sobolev_norm(c, 1.5) == doctest::Approx(std::sqrt(pi * std::pow(2.0, 1.5))));
  CHECK(h_alpha_half_seminorm(u, 1.0) == doctest::Approx(std::sqrt(pi)));
  CHECK(linf_norm(to_physical(u)) == doctest::Approx(2.0));
}

TEST_CASE("coefficient and quadrature inner products coincide") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const Domain d = Domain::padded(0.5, 4.0, 1 + t % 12);
    const auto f = random_real_field(d, rng), g = random_real_field(d, rng);
    const Complex spectral = inner_product(f, g);
    CHECK(std::abs(spectral.imag()) < 1e-13);
    CHECK(spectral.real() == doctest::Approx(quadrature_inner_product(f, g)).epsilon(1e-12));
  }
}

TEST_CASE("dealiased products equal the truncated convolution; small grids alias") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 8; ++n) {
    const Domain d = Domain::padded(0.0, 2.0 * pi, n);
    const auto f = random_real_field(d, rng), g = random_real_field(d, rng);
    const auto ref = convolution_oracle(f, g);
    CHECK(max_diff(dealiased_product(f, g), ref) < 1e-13 * ref.max_abs());
    CHECK(max_diff(pseudospectral_product(f, g, 3 * n + 1), ref) < 1e-13 * ref.max_abs());
    CHECK(max_diff(pseudospectral_product(f, g, 2 * n + 1), ref) > 1e-3 * ref.max_abs());
    CHECK_THROWS_AS(pseudospectral_product(f, g, 2 * n), ResolutionError);
  }
}

TEST_CASE("convolution oracle on a hand example") {
  // (cos x)^2 = 1/2 + cos(2x)/2 truncated to |k| <= 1 keeps only the mean.
  const Domain d = Domain::padded(0.0, 2.0 * pi, 1);
  SpectralField c(d);
  c[1] = c[-1] = 0.5;
  const auto sq = convolution_oracle(c, c);
  CHECK(sq[0] == Complex(0.5));
  CHECK(sq[1] == Complex(0.0));
}

TEST_CASE("random fields are real with the requested decay") {
  std::mt19937_64 rng(1);
  const Domain d = Domain::padded(0.0, 1.0, 30);
  const auto f = random_real_field(d, rng, 0.5);
  CHECK(f.is_hermitian(0.0));
  CHECK(f[0].imag() == 0.0);
  CHECK(std::abs(f[20]) <= std::sqrt(2.0) * std::pow(0.5, 20));
}
