#pragma once

#include <complex>
#include <filesystem>
#include <vector>

namespace fracwave {

/// One period of a smooth traveling wave u(x, t) = phi(x - c t), tabulated
/// on a uniform grid xi_j = j a / K, j = 0..K (the last point repeats the
/// first). Evaluation between nodes uses the trigonometric interpolant of the
/// periodic table.
class TravelingProfile {
 public:
  TravelingProfile(std::vector<double> xi, std::vector<double> values, double period, double speed);

  const std::vector<double>& xi() const noexcept { return xi_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double period() const noexcept { return period_; }
  double speed() const noexcept { return speed_; }

  /// phi at any real xi (periodic).
  double operator()(double xi) const;

  /// u(x, t) = phi(x - c t).
  double at(double x, double t) const { return (*this)(x - speed_ * t); }

  /// Two-column CSV `xi,value`.
  void write_csv(const std::filesystem::path& path) const;

 private:
  std::vector<double> xi_;
  std::vector<double> values_;
  double period_;
  double speed_;
  std::vector<std::complex<double>> harmonics_;  // c_j, j = 0..J, of the periodic table
};

/// Smooth Camassa-Holm traveling wave: phi'' = phi - 3/(phi - c)^2 with
/// phi(0) = 1, phi'(0) = 0, integrated with fixed-step RK4. The period is the
/// first return of (phi, phi') to (1, 0) within `tol`.
/// Throws ProfileError for c <= 1, for a trajectory that approaches phi = c,
/// or when no return is found.
TravelingProfile ch_smooth_profile(double c, double tol = 1e-8, int samples = 4096);

/// Peakon c exp(-|x - c t - x0|) with the offset wrapped into [-L/2, L/2).
double peakon(double x, double t, double c, double x0, double length);

/// Periodic peakon of crest height c_i at x_i on a period L:
///   c_i cosh(L/2 - d) / cosh(L/2),  d = periodic distance to x_i in [0, L/2].
double periodized_peakon(double x, double c_i, double x_i, double length);

/// BBM solitary wave 3(c_s - 1) sech^2( sqrt((c_s - 1)/c_s) (x - x0 - c_s t) / 2 ).
/// ParameterError for c_s <= 1.
double bbm_solitary(double x, double t, double c_s, double x0);

}  // namespace fracwave
