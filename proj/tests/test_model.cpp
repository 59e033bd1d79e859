#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fracwave/error.hpp"
#include "fracwave/exact.hpp"
#include "fracwave/model.hpp"
#include "fracwave/random_fields.hpp"
#include "fracwave/spectral.hpp"

using namespace fracwave;
using std::numbers::pi;

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(ModelParams::camassa_holm().validate());
  CHECK_THROWS_AS((ModelParams{0.0, 1.0, 0.0, 0.5}).validate(), ParameterError);
  CHECK_THROWS_AS((ModelParams{0.0, 1.0, 0.0, 2.5}).validate(), ParameterError);
  CHECK_THROWS_AS((ModelParams{0.0, 0.0, 0.0, 2.0}).validate(), ParameterError);
  CHECK_THROWS_AS((ModelParams{std::nan(""), 1.0, 0.0, 2.0}).validate(), ParameterError);
  const auto b = ModelParams::fbbm(1.5);
  CHECK(b.kappa1 == 1.0);
  CHECK(b.gamma == doctest::Approx(1.0 / 3.0));
  CHECK(b.kappa2 == 0.0);
  CHECK(b.alpha == 1.5);
  CHECK(ModelParams::classical_ch(0.25).kappa1 == 0.5);
}

TEST_CASE("linear dispersion of a single mode") {
  // 2k > N, so the quadratic terms only reach mode 0 and 2k and drop out.
  const Domain d = Domain::padded(0.0, 10.0, 6);
  SpectralField u(d);
  u[4] = Complex(0.3, -0.1);
  u[-4] = std::conj(u[4]);
  for (double a : {1.0, 1.5, 2.0}) {
    const auto g = rhs(u, ModelParams::fbbm(a));
    const double kappa = 2.0 * pi * 4 / 10.0;
    const Complex expected = Complex(0.0, -kappa / (1.0 + std::pow(kappa, a))) * u[4];
    CHECK(std::abs(g[4] - expected) < 1e-14);
    CHECK(std::abs(g[0]) < 1e-15);
    CHECK(std::abs(g[1]) < 1e-15);
  }
}

TEST_CASE("traveling waves satisfy u_t = -c u_x under the semi-discrete rhs") {
  SUBCASE("Camassa-Holm smooth wave") {
    const auto profile = ch_smooth_profile(3.0);
    const Domain d = Domain::from_nodes(0.0, 2.0 * profile.period(), 256);
    const auto u = sample_and_transform(d, [&](double x) { return profile(x); });
    const auto g = rhs(u, ModelParams::camassa_holm());
    const auto expected = -3.0 * derivative(u);
    CHECK(l2_norm(g - expected) < 1e-6 * l2_norm(expected));
  }
  SUBCASE("BBM solitary wave") {
    const Domain d = Domain::from_nodes(-60.0, 120.0, 512);
    const auto u = sample_and_transform(d, [](double x) { return bbm_solitary(x, 0.0, 2.0, 0.0); });
    const auto g = rhs(u, ModelParams::fbbm(2.0));
    const auto expected = -2.0 * derivative(u);
    CHECK(l2_norm(g - expected) < 1e-9 * l2_norm(expected));
  }
}

TEST_CASE("pseudospectral rhs equals the direct-sum assembly") {
  std::mt19937_64 rng(4);
  for (const ModelParams p : {ModelParams::camassa_holm(), ModelParams::fbbm(1.2),
                              ModelParams{0.4, 0.7, 0.9, 1.6}}) {
    for (int n : {1, 5, 12}) {
      const auto u = random_real_field(Domain::padded(-2.0, 9.0, n), rng);
      const auto fast = rhs(u, p);
      const auto ref = rhs_convolution(u, p);
      CHECK(l2_norm(fast - ref) < 1e-12 * l2_norm(ref));
      CHECK(fast.is_hermitian());
    }
  }
}

TEST_CASE("operator evaluations on larger grids match the one-shot rhs") {
  std::mt19937_64 rng(8);
  const Domain d = Domain::from_nodes(0.0, 30.0, 1024);
  const auto u = random_real_field(d, rng, 0.98);
  FchOperator op(d, ModelParams::camassa_holm());
  SpectralField g(d);
  op.evaluate(u, g);
  CHECK(l2_norm(g - rhs(u, ModelParams::camassa_holm())) == 0.0);
  CHECK(op.last_linf() == doctest::Approx(linf_norm(to_physical(u))));
}

TEST_CASE("NaN input raises a blow-up error") {
  const Domain d = Domain::padded(0.0, 1.0, 4);
  SpectralField u(d);
  u[1] = u[-1] = std::numeric_limits<double>::quiet_NaN();
  FchOperator op(d, ModelParams::camassa_holm());
  SpectralField g(d);
  CHECK_THROWS_AS(op.evaluate(u, g), BlowUpError);
}

TEST_CASE("mass and energy closed forms") {
  const Domain d = Domain::padded(0.0, 2.0 * pi, 4);
  const auto u = sample_and_transform(d, [](double x) { return 0.5 + std::cos(2 * x); });
  CHECK(mass(u) == doctest::Approx(pi));
  // 2 pi (1/4 + (1 + 2^a)/2)
  CHECK(energy(u, 1.5) == doctest::Approx(2 * pi * (0.25 + (1 + std::pow(2.0, 1.5)) / 2)));
}

TEST_CASE("conserved-quantity rates vanish along the flow") {
  std::mt19937_64 rng(12);
  for (const ModelParams p : {ModelParams::camassa_holm(), ModelParams::fbbm(1.0),
                              ModelParams::classical_ch(1.0), ModelParams{-1.0, 2.0, 0.5, 1.3}}) {
    const auto u = random_real_field(Domain::padded(0.0, 20.0, 16), rng);
    const auto g = rhs(u, p);
    CHECK(std::abs(mass_rate(g)) < 1e-12 * std::sqrt(20.0) * l2_norm(g));
    CHECK(std::abs(energy_rate(u, g, p.alpha)) < 1e-10 * energy(u, p.alpha));
    // Not a tautology: a generic direction changes the energy.
    CHECK(std::abs(energy_rate(u, u, p.alpha)) > 1.0);
  }
}

TEST_CASE("diagnostics record, append and report drift") {
  const Domain d = Domain::padded(0.0, 1.0, 2);
  SpectralField u(d);
  u[0] = 1.0;
  Diagnostics a;
  a.record(0.0, u, 2.0);
  u[0] = 1.001;
  a.record(1.0, u, 2.0);
  Diagnostics b;
  b.record(1.0, u, 2.0);
  b.record(2.0, u, 2.0);
  a.append(b);
  CHECK(a.size() == 3);
  CHECK(a.times.back() == 2.0);
  CHECK(a.max_relative_mass_drift() == doctest::Approx(1e-3));
  CHECK(a.max_relative_energy_drift() == doctest::Approx(1.001 * 1.001 - 1.0));
}
