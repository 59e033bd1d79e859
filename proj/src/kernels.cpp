#include "fracwave/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace fracwave::kernels {
namespace {

inline long length(std::size_t n) { return static_cast<long>(n); }

}  // namespace

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const long n = length(out.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (long j = 0; j < n; ++j) out[j] = a[j] * b[j];
}

void square(std::span<const double> a, std::span<double> out) {
  const long n = length(out.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (long j = 0; j < n; ++j) out[j] = a[j] * a[j];
}

double max_abs(std::span<const double> a) {
  const long n = length(a.size());
  double m = 0.0;
  bool nan = false;
#pragma omp parallel for schedule(static) reduction(max : m) reduction(|| : nan) \
    if (n >= kParallelThreshold)
  for (long j = 0; j < n; ++j) {
    const double v = std::abs(a[j]);
    nan = nan || std::isnan(v);
    m = v > m ? v : m;
  }
  return nan ? std::numeric_limits<double>::quiet_NaN() : m;
}

void axpy(std::span<const std::complex<double>> x, double h,
          std::span<const std::complex<double>> k, std::span<std::complex<double>> y) {
  const long n = length(y.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (long i = 0; i < n; ++i) y[i] = x[i] + h * k[i];
}

void accumulate(std::span<std::complex<double>> acc, double w,
                std::span<const std::complex<double>> k) {
  const long n = length(acc.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (long i = 0; i < n; ++i) acc[i] += w * k[i];
}

namespace serial {

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a[j] * b[j];
}

void square(std::span<const double> a, std::span<double> out) {
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a[j] * a[j];
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) {
    if (std::isnan(v)) return std::numeric_limits<double>::quiet_NaN();
    m = std::max(m, std::abs(v));
  }
  return m;
}

void axpy(std::span<const std::complex<double>> x, double h,
          std::span<const std::complex<double>> k, std::span<std::complex<double>> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + h * k[i];
}

void accumulate(std::span<std::complex<double>> acc, double w,
                std::span<const std::complex<double>> k) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * k[i];
}

}  // namespace serial
}  // namespace fracwave::kernels
