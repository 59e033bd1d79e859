#include "fracwave/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "fracwave/harness.hpp"
#include "fracwave/integrator.hpp"
#include "fracwave/random_fields.hpp"
#include "fracwave/spectral.hpp"

namespace fracwave::verify {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAlphas[] = {1.0, 1.5, 2.0};

std::string format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// Tracks the worst measure seen and the inputs that produced it.
struct Worst {
  double value = 0.0;
  std::string witness;
  void update(double v, const std::function<std::string()>& describe) {
    if (!(v <= value)) {  // NaN counts as worst
      value = v;
      witness = describe();
    }
  }
};

CheckResult timed(std::string name, double tolerance, const std::function<Worst()>& body) {
  const auto start = std::chrono::steady_clock::now();
  const Worst w = body();
  CheckResult r;
  r.name = std::move(name);
  r.worst = w.value;
  r.tolerance = tolerance;
  r.passed = w.value <= tolerance;
  r.witness = w.witness;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Domain random_domain(std::mt19937_64& rng, int max_modes) {
  std::uniform_int_distribution<int> modes(1, max_modes);
  const int n = modes(rng);
  return std::bernoulli_distribution(0.5)(rng) ? Domain::padded(-kPi, 2.0 * kPi, n)
                                               : Domain::padded(0.0, 50.0, n);
}

std::string describe(const Domain& d, double alpha) {
  return format("L=%g N=%d alpha=%g", d.length(), d.modes(), alpha);
}

SpectralField embed(const SpectralField& f, const Domain& target) {
  SpectralField out(target);
  for (int k = -f.modes(); k <= f.modes(); ++k) out[k] = f[k];
  return out;
}

double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (int k = -a.modes(); k <= a.modes(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : num; }

// A single real mode cos(k x) with 2k > N: its square lands on modes 0 and 2k,
// and the flux derivative kills mode 0, so the dynamics are exactly linear.
struct LinearMode {
  Domain domain = Domain::padded(-kPi, 2.0 * kPi, 32);
  int k = 20;
  ModelParams params{20.0, 1.0 / 3.0, 0.0, 1.0};

  SpectralField initial() const {
    SpectralField u(domain);
    u[k] = u[-k] = 0.5;
    return u;
  }
  Complex lambda() const {
    const double kappa = domain.wavenumber(k);
    return Complex(0.0, kFluxSign * params.kappa1 * kappa / (1.0 + std::pow(kappa, params.alpha)));
  }
};

SpectralField integrate_with(const SpectralField& u0, const ModelParams& params, double t_end,
                             double dt) {
  IntegrationConfig cfg;
  cfg.t_end = t_end;
  cfg.dt = dt;
  cfg.sample_every = std::numeric_limits<std::int64_t>::max();
  return integrate(u0, cfg, params).state;
}

}  // namespace

double log_log_slope(const std::vector<double>& dt, const std::vector<double>& err) {
  const std::size_t n = std::min(dt.size(), err.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(dt[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::pair<std::string, ModelParams>> presets() {
  return {
      {"camassa-holm", ModelParams::camassa_holm()},
      {"fbbm-1", ModelParams::fbbm(1.0)},
      {"fbbm-1.5", ModelParams::fbbm(1.5)},
      {"fbbm-2", ModelParams::fbbm(2.0)},
      {"classical-ch", ModelParams::classical_ch(0.5)},
      {"mixed-1.3", ModelParams{0.7, 0.9, 0.4, 1.3}},
      {"mixed-1", ModelParams{-0.3, 2.0, 1.0, 1.0}},
  };
}

CheckResult symmetry(const Options& o) {
  return timed("symmetry", 1e-11, [&] {
    std::mt19937_64 rng(o.seed);
    Worst w;
    for (int t = 0; t < o.trials; ++t) {
      const Domain d = random_domain(rng, 16);
      const auto f = random_real_field(d, rng), g = random_real_field(d, rng);
      for (double a : kAlphas) {
        const auto df = frac_laplacian(f, a), dg = frac_laplacian(g, a);
        const double lhs = quadrature_inner_product(df, g);
        const double rhs = quadrature_inner_product(f, dg);
        const double scale = l2_norm(df) * l2_norm(g) + l2_norm(f) * l2_norm(dg);
        w.update(safe_ratio(std::abs(lhs - rhs), scale), [&] { return describe(d, a); });
      }
    }
    return w;
  });
}

CheckResult orthogonality(const Options& o) {
  return timed("orthogonality", 1e-11, [&] {
    std::mt19937_64 rng(o.seed + 1);
    Worst w;
    for (int t = 0; t < o.trials; ++t) {
      const Domain d = random_domain(rng, 16);
      const auto f = random_real_field(d, rng);
      for (double a : kAlphas) {
        const double ip = quadrature_inner_product(frac_laplacian(derivative(f), a), f);
        const double n2 = l2_norm(f) * l2_norm(f);
        w.update(safe_ratio(std::abs(ip), n2), [&] { return describe(d, a); });
      }
    }
    return w;
  });
}

CheckResult semigroup(const Options& o) {
  return timed("semigroup", 1e-12, [&] {
    std::mt19937_64 rng(o.seed + 2);
    Worst w;
    for (int t = 0; t < o.trials; ++t) {
      const Domain d = random_domain(rng, 16);
      const auto f = random_real_field(d, rng);
      for (double a : kAlphas) {
        for (double b : kAlphas) {
          const auto two = frac_laplacian(frac_laplacian(f, b), a);
          const auto one = frac_laplacian(f, a + b);
          w.update(safe_ratio(max_diff(two, one), one.max_abs()),
                   [&] { return describe(d, a) + format(" beta=%g", b); });
        }
      }
    }
    return w;
  });
}

CheckResult projection_commutation(const Options& o) {
  return timed("projection-commutation", 0.0, [&] {
    std::mt19937_64 rng(o.seed + 3);
    Worst w;
    for (int t = 0; t < o.trials; ++t) {
      const Domain d = random_domain(rng, 16);
      const auto f = random_real_field(d, rng);
      const int target = std::uniform_int_distribution<int>(1, d.modes())(rng);
      for (double a : kAlphas) {
        const auto pd = project(frac_laplacian(f, a), target);
        const auto dp = frac_laplacian(project(f, target), a);
        w.update(max_diff(pd, dp), [&] { return describe(d, a) + format(" target=%d", target); });
      }
    }
    return w;
  });
}

CheckResult bernstein(const Options& o) {
  // Reported measure: |v|_inf / (sqrt((2N+1)/L) |v|) - 1, at most rounding.
  return timed("bernstein", 1e-12, [&] {
    std::mt19937_64 rng(o.seed + 4);
    Worst w;
    for (int t = 0; t < o.trials; ++t) {
      const Domain d = random_domain(rng, 16);
      const auto v = random_real_field(d, rng);
      const double sup = linf_norm(to_physical(v, 16 * d.coefficient_count()));
      const double bound = std::sqrt(d.coefficient_count() / d.length()) * l2_norm(v);
      w.update(sup / bound - 1.0, [&] { return describe(d, 0.0); });
    }
    return w;
  });
}

CheckResult product_estimate(const Options& o) {
  // Measure: ||D^a(fg)|| / (C (|f|_inf ||D^a g|| + |g|_inf ||D^a f||)), at most 1.
  return timed("product-estimate", 1.0, [&] {
    std::mt19937_64 rng(o.seed + 5);
    Worst w;
    for (int t = 0; t < o.trials; ++t) {
      const Domain d = random_domain(rng, 16);
      const Domain wide = Domain::padded(d.x_left(), d.length(), 2 * d.modes());
      const auto f = embed(random_real_field(d, rng), wide);
      const auto g = embed(random_real_field(d, rng), wide);
      const auto fg = dealiased_product(f, g);
      const int samples = 16 * wide.coefficient_count();
      const double f_inf = linf_norm(to_physical(f, samples));
      const double g_inf = linf_norm(to_physical(g, samples));
      for (double a : kAlphas) {
        const double c = std::max(1.0, std::pow(2.0, a - 1.0));
        const double lhs = l2_norm(frac_laplacian(fg, a));
        const double rhs = c * (f_inf * l2_norm(frac_laplacian(g, a)) +
                                g_inf * l2_norm(frac_laplacian(f, a)));
        w.update(safe_ratio(lhs, rhs), [&] { return describe(d, a); });
      }
    }
    return w;
  });
}

CheckResult product_oracle(const Options& o) {
  return timed("product-oracle", 1e-12, [&] {
    std::mt19937_64 rng(o.seed + 6);
    Worst w;
    for (int n = 1; n <= 8; ++n) {
      const Domain d = Domain::padded(-kPi, 2.0 * kPi, n);
      for (int t = 0; t < o.trials; ++t) {
        const auto f = random_real_field(d, rng), g = random_real_field(d, rng);
        const auto fast = o.tamper_dealias_pad ? pseudospectral_product(f, g, 2 * n + 1)
                                               : dealiased_product(f, g);
        const auto ref = convolution_oracle(f, g);
        w.update(safe_ratio(max_diff(fast, ref), ref.max_abs()),
                 [&] { return describe(d, 0.0) + format(" trial=%d", t); });
      }
    }
    return w;
  });
}

CheckResult rhs_oracle(const Options& o) {
  return timed("rhs-oracle", 1e-12, [&] {
    std::mt19937_64 rng(o.seed + 7);
    Worst w;
    for (const auto& [name, params] : presets()) {
      for (int n = 1; n <= 8; ++n) {
        const Domain d = std::bernoulli_distribution(0.5)(rng) ? Domain::padded(-kPi, 2 * kPi, n)
                                                              : Domain::padded(0.0, 50.0, n);
        for (int t = 0; t < std::max(1, o.trials / 10); ++t) {
          const auto u = random_real_field(d, rng);
          const auto fast = rhs(u, params);
          const auto ref = rhs_convolution(u, params);
          w.update(safe_ratio(max_diff(fast, ref), ref.max_abs()),
                   [&, name = name] { return name + " " + describe(d, params.alpha); });
        }
      }
    }
    return w;
  });
}

CheckResult rhs_hermitian(const Options& o) {
  // Measure: 0 when every rhs is Hermitian to 1e-12, else 1.
  return timed("rhs-hermitian", 0.0, [&] {
    std::mt19937_64 rng(o.seed + 8);
    Worst w;
    for (const auto& [name, params] : presets()) {
      for (int t = 0; t < std::max(1, o.trials / 10); ++t) {
        const Domain d = random_domain(rng, 16);
        const auto u = random_real_field(d, rng);
        const bool ok = rhs(u, params).is_hermitian(1e-12) &&
                        rhs_convolution(u, params).is_hermitian(1e-12);
        w.update(ok ? 0.0 : 1.0, [&, name = name] { return name + " " + describe(d, params.alpha); });
      }
    }
    return w;
  });
}

CheckResult conservation_rates(const Options& o) {
  // Measure: max of |dM/dt| / (1e-12 sqrt(L) ||g||) and |dE/dt| / (1e-10 E),
  // so 1 is the threshold for both.
  return timed("conservation-rates", 1.0, [&] {
    std::mt19937_64 rng(o.seed + 9);
    Worst w;
    for (const auto& [name, params] : presets()) {
      for (int t = 0; t < std::max(1, o.trials / 5); ++t) {
        const Domain d = random_domain(rng, 16);
        const auto u = random_real_field(d, rng);
        const auto g = rhs(u, params);
        const double m = safe_ratio(std::abs(mass_rate(g)), std::sqrt(d.length()) * l2_norm(g));
        const double e = std::abs(energy_rate(u, g, params.alpha)) / energy(u, params.alpha);
        w.update(std::max(m / 1e-12, e / 1e-10), [&, name = name] {
          return name + " " + describe(d, params.alpha) + format(" mass=%.2e energy=%.2e", m, e);
        });
      }
    }
    return w;
  });
}

CheckResult spectral_decay(const Options&) {
  // u(x) = sum 2^{-|k|} e^{ikx} = (3/4) / (5/4 - cos x). The projection error
  // must halve with every added mode and match sqrt(2L/3) 2^{-N}.
  return timed("spectral-decay", 1e-9, [&] {
    const Domain d = Domain::padded(0.0, 2.0 * kPi, 64);
    const auto u = sample_and_transform(d, [](double x) { return 0.75 / (1.25 - std::cos(x)); });
    Worst w;
    double previous = 0.0;
    for (int n = 1; n <= 20; ++n) {
      double tail = 0.0;
      for (int k = n + 1; k <= d.modes(); ++k) tail += std::norm(u[k]) + std::norm(u[-k]);
      const double err = std::sqrt(d.length() * tail);
      const double expected = std::sqrt(2.0 * d.length() / 3.0) * std::pow(2.0, -n);
      w.update(std::abs(err / expected - 1.0), [&] { return format("N=%d vs closed form", n); });
      if (n > 1) w.update(err / previous - 0.5, [&] { return format("N=%d halving", n); });
      previous = err;
    }
    return w;
  });
}

CheckResult transform_round_trip(const Options& o) {
  return timed("transform-round-trip", 1e-13, [&] {
    std::mt19937_64 rng(o.seed + 10);
    Worst w;
    for (int t = 0; t < o.trials; ++t) {
      const Domain d = random_domain(rng, 64);
      const auto f = random_real_field(d, rng);
      const int samples = d.coefficient_count() + std::uniform_int_distribution<int>(0, 40)(rng);
      const auto back = to_spectral(to_physical(f, samples), d.modes());
      w.update(safe_ratio(max_diff(back, f), f.max_abs()),
               [&] { return describe(d, 0.0) + format(" M=%d", samples); });
    }
    return w;
  });
}

CheckResult rk4_local_order(const Options&) {
  // Measure: |slope - 5| of the one-step error against exp(lambda dt).
  return timed("rk4-local-order", 0.3, [&] {
    const LinearMode lm;
    const auto u0 = lm.initial();
    std::vector<double> dts{1e-2, 5e-3, 2.5e-3}, errs;
    for (double dt : dts) {
      const auto u1 = rk4_step(u0, dt, lm.params);
      const Complex exact = u0[lm.k] * std::exp(lm.lambda() * dt);
      double err = std::abs(u1[lm.k] - exact) + std::abs(u1[-lm.k] - std::conj(exact));
      for (int k = -lm.domain.modes(); k <= lm.domain.modes(); ++k)
        if (std::abs(k) != lm.k) err += std::abs(u1[k]);
      errs.push_back(err);
    }
    const double slope = log_log_slope(dts, errs);
    Worst w;
    w.update(std::abs(slope - 5.0), [&] {
      return format("slope=%.3f errors=%.2e,%.2e,%.2e", slope, errs[0], errs[1], errs[2]);
    });
    return w;
  });
}

CheckResult rk4_global_order(const Options&) {
  // Measure: max |slope - 4| over the two problems; errors against a run with
  // an eighth of the smallest step.
  return timed("rk4-global-order", 0.3, [&] {
    Worst w;
    auto study = [&](const std::string& label, const SpectralField& u0, const ModelParams& params,
                     double t_end, std::vector<double> dts) {
      const auto ref = integrate_with(u0, params, t_end, dts.back() / 8.0);
      std::vector<double> errs;
      for (double dt : dts) errs.push_back(l2_norm(integrate_with(u0, params, t_end, dt) - ref));
      const double slope = log_log_slope(dts, errs);
      w.update(std::abs(slope - 4.0), [&] {
        return format("%s slope=%.3f errors=%.2e..%.2e", label.c_str(), slope, errs.front(),
                      errs.back());
      });
    };

    const LinearMode lm;
    study("linear-mode", lm.initial(), lm.params, 1.0, {0.02, 0.01, 0.005, 0.0025});

    const auto& bbm = find_experiment("ex5-bbm");
    const Domain d = Domain::from_nodes(bbm.x_left, bbm.length, 256);
    const Solution init = initial_condition(bbm);
    const auto u0 = sample_and_transform(d, [&](double x) { return init(x, 0.0); });
    study("bbm-256", u0, bbm.params, bbm.t_end, {0.05, 0.025, 0.0125, 0.00625});
    return w;
  });
}

Report run(Level level, const Options& options) {
  Report r;
  for (auto* check : {symmetry, orthogonality, semigroup, projection_commutation, bernstein,
                      product_estimate, product_oracle, rhs_oracle, rhs_hermitian,
                      conservation_rates})
    r.checks.push_back(check(options));
  if (level == Level::Full) {
    for (auto* check : {spectral_decay, transform_round_trip, rk4_local_order, rk4_global_order})
      r.checks.push_back(check(options));
  }
  return r;
}

void print(std::ostream& out, const Report& report) {
  for (const auto& c : report.checks) {
    out << format("%-4s %-24s worst=%-10.3e tol=%-10.3e %7.2fs", c.passed ? "ok" : "FAIL",
                  c.name.c_str(), c.worst, c.tolerance, c.seconds);
    if (!c.witness.empty()) out << "  [" << c.witness << ']';
    out << '\n';
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return !c.passed; });
  out << (failed == 0 ? "all " : "") << report.checks.size() - failed << '/' << report.checks.size()
      << " checks passed\n";
}

}  // namespace fracwave::verify
