#include "fracwave/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <string>

#include "fracwave/error.hpp"
#include "fracwave/fft.hpp"

namespace fracwave {
namespace {

using State = std::array<double, 2>;  // (phi, phi')

struct ProfileOde {
  double c;

  State slope(const State& y) const {
    const double gap = y[0] - c;
    return {y[1], y[0] - 3.0 / (gap * gap)};
  }

  State step(const State& y, double h) const {
    const State k1 = slope(y);
    const State k2 = slope({y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
    const State k3 = slope({y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
    const State k4 = slope({y[0] + h * k3[0], y[1] + h * k3[1]});
    return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
  }

  void check(const State& y, double t) const {
    if (!std::isfinite(y[0]) || !std::isfinite(y[1]) || y[0] > c - 1e-6) {
      throw ProfileError("profile approaches the singular level phi = c near xi = " +
                         std::to_string(t));
    }
  }
};

constexpr double kCoarseStep = 1e-4;
// Small-amplitude oscillations of the profile equation have period near
// 2*pi; ten of those bound the search.
constexpr double kSearchSpan = 10.0 * 2.0 * std::numbers::pi;

}  // namespace

TravelingProfile::TravelingProfile(std::vector<double> xi, std::vector<double> values,
                                   double period, double speed)
    : xi_(std::move(xi)), values_(std::move(values)), period_(period), speed_(speed) {
  if (values_.size() < 3 || values_.size() != xi_.size()) {
    throw ProfileError("profile table needs matching xi/value columns with >= 3 rows");
  }
  if (!(period_ > 0.0)) throw ProfileError("profile period must be positive");
  if (std::abs(values_.front() - values_.back()) > 1e-8) {
    throw ProfileError("profile table is not periodic");
  }
  const int k = static_cast<int>(values_.size()) - 1;
  auto fft = shared_fft(k);
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(fft->half_size()));
  fft->forward(std::span<const double>(values_.data(), static_cast<std::size_t>(k)), spec);

  double biggest = 0.0;
  for (auto& c : spec) {
    c /= static_cast<double>(k);
    biggest = std::max(biggest, std::abs(c));
  }
  std::size_t keep = spec.size();
  while (keep > 1 && std::abs(spec[keep - 1]) < 1e-17 * biggest) --keep;
  spec.resize(keep);
  // The Nyquist harmonic of an even table enters once, not twice.
  if (k % 2 == 0 && keep == static_cast<std::size_t>(k / 2 + 1)) spec.back() *= 0.5;
  harmonics_ = std::move(spec);
}

double TravelingProfile::operator()(double xi) const {
  const double theta = 2.0 * std::numbers::pi * xi / period_;
  const std::complex<double> rot = std::polar(1.0, theta);
  std::complex<double> phase = rot;
  double sum = harmonics_[0].real();
  for (std::size_t j = 1; j < harmonics_.size(); ++j) {
    sum += 2.0 * (harmonics_[j] * phase).real();
    phase *= rot;
  }
  return sum;
}

void TravelingProfile::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << "xi,value\n" << std::setprecision(17);
  for (std::size_t j = 0; j < xi_.size(); ++j) out << xi_[j] << ',' << values_[j] << '\n';
}

TravelingProfile ch_smooth_profile(double c, double tol, int samples) {
  if (!(c > 1.0)) throw ProfileError("profile speed must exceed 1");
  if (samples < 16) throw ProfileError("profile table needs at least 16 samples");
  const ProfileOde ode{c};
  const State start{1.0, 0.0};
  const double curvature = ode.slope(start)[1];
  if (curvature == 0.0) throw ProfileError("phi = 1 is an equilibrium; no oscillation");
  const double leaving_sign = curvature > 0.0 ? 1.0 : -1.0;

  // March until phi' has changed sign twice: turning point, then return.
  State y = start;
  double t = 0.0;
  int crossings = 0;
  double last_sign = leaving_sign;
  State bracket_start = y;
  double bracket_t = 0.0;
  y = ode.step(y, kCoarseStep);
  t = kCoarseStep;
  while (crossings < 2) {
    if (t > kSearchSpan) throw ProfileError("no period found within the search span");
    const State next = ode.step(y, kCoarseStep);
    ode.check(next, t + kCoarseStep);
    const double s = next[1] > 0.0 ? 1.0 : (next[1] < 0.0 ? -1.0 : last_sign);
    if (s != last_sign) {
      ++crossings;
      last_sign = s;
      bracket_start = y;
      bracket_t = t;
    }
    y = next;
    t += kCoarseStep;
  }

  // Bisect the partial step on which phi' returns to zero.
  double lo = 0.0, hi = kCoarseStep;
  const double p_lo = bracket_start[1];
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double p_mid = ode.step(bracket_start, mid)[1];
    if ((p_mid > 0.0) == (p_lo > 0.0)) lo = mid; else hi = mid;
  }
  const double period = bracket_t + 0.5 * (lo + hi);
  const State back = ode.step(bracket_start, 0.5 * (lo + hi));
  if (std::abs(back[0] - 1.0) > tol || std::abs(back[1]) > tol) {
    throw ProfileError("trajectory does not return to (1, 0) within tolerance");
  }

  // Resample with a step that lands exactly on the table nodes.
  const int sub = static_cast<int>(std::ceil(period / (samples * kCoarseStep)));
  const double h = period / (static_cast<double>(samples) * sub);
  std::vector<double> xi(static_cast<std::size_t>(samples) + 1);
  std::vector<double> values(static_cast<std::size_t>(samples) + 1);
  y = start;
  xi[0] = 0.0;
  values[0] = y[0];
  for (int j = 1; j <= samples; ++j) {
    for (int s = 0; s < sub; ++s) y = ode.step(y, h);
    xi[static_cast<std::size_t>(j)] = period * j / samples;
    values[static_cast<std::size_t>(j)] = y[0];
  }
  return TravelingProfile(std::move(xi), std::move(values), period, c);
}

double peakon(double x, double t, double c, double x0, double length) {
  double d = x - c * t - x0;
  d -= length * std::floor((d + 0.5 * length) / length);
  return c * std::exp(-std::abs(d));
}

double periodized_peakon(double x, double c_i, double x_i, double length) {
  if (!(length > 0.0)) throw DomainError("period must be positive");
  const double r = std::fmod(std::abs(x - x_i), length);
  const double d = std::min(r, length - r);
  // cosh(L/2 - d) / cosh(L/2) without overflow for long periods.
  return c_i * (std::exp(-d) + std::exp(d - length)) / (1.0 + std::exp(-length));
}

double bbm_solitary(double x, double t, double c_s, double x0) {
  if (!(c_s > 1.0)) throw ParameterError("solitary wave speed must exceed 1");
  const double z = 0.5 * std::sqrt((c_s - 1.0) / c_s) * (x - x0 - c_s * t);
  const double sech = 1.0 / std::cosh(z);
  return 3.0 * (c_s - 1.0) * sech * sech;
}

}  // namespace fracwave
