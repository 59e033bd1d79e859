#pragma once

#include <complex>
#include <memory>
#include <span>

namespace fracwave {

/// Real-to-complex / complex-to-real transform pair of one size, backed by
/// FFTW. Plans are made with FFTW_ESTIMATE so results are reproducible from
/// run to run. Executing a plan is thread-safe; creating one is serialized
/// internally.
class RealFft {
 public:
  explicit RealFft(int size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const noexcept { return size_; }
  int half_size() const noexcept { return size_ / 2 + 1; }

  /// out[k] = sum_j in[j] exp(-2 pi i j k / size), k = 0..size/2.
  void forward(std::span<const double> in, std::span<std::complex<double>> out) const;

  /// out[j] = sum_k in[k] exp(+2 pi i j k / size) over the full Hermitian
  /// spectrum. `in` is used as scratch and overwritten.
  void inverse(std::span<std::complex<double>> in, std::span<double> out) const;

 private:
  int size_;
  void* forward_plan_;
  void* inverse_plan_;
};

/// Process-wide cache of transforms keyed by size.
std::shared_ptr<const RealFft> shared_fft(int size);

}  // namespace fracwave
