#pragma once

#include <complex>
#include <span>

namespace fracwave::kernels {

/// Loops shorter than this run on the calling thread only.
inline constexpr int kParallelThreshold = 1 << 14;

// Data-parallel inner loops of the pseudospectral right-hand side. Each has
// an OpenMP body; the `serial` namespace below holds plain loops with the
// same contract for testing and benchmarking.

/// out[j] = a[j] * b[j]
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);

/// out[j] = a[j]^2
void square(std::span<const double> a, std::span<double> out);

/// max_j |a[j]|, NaN if any entry is NaN.
double max_abs(std::span<const double> a);

/// y[i] = x[i] + h * k[i]
void axpy(std::span<const std::complex<double>> x, double h,
          std::span<const std::complex<double>> k, std::span<std::complex<double>> y);

/// acc[i] += w * k[i]
void accumulate(std::span<std::complex<double>> acc, double w,
                std::span<const std::complex<double>> k);

namespace serial {
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void square(std::span<const double> a, std::span<double> out);
double max_abs(std::span<const double> a);
void axpy(std::span<const std::complex<double>> x, double h,
          std::span<const std::complex<double>> k, std::span<std::complex<double>> y);
void accumulate(std::span<std::complex<double>> acc, double w,
                std::span<const std::complex<double>> k);
}  // namespace serial

}  // namespace fracwave::kernels
