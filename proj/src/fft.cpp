#include "fracwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "fracwave/error.hpp"

namespace fracwave {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

constexpr unsigned kPlanFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

}  // namespace

RealFft::RealFft(int size) : size_(size), forward_plan_(nullptr), inverse_plan_(nullptr) {
  if (size < 1) throw DomainError("transform size must be positive");
  std::vector<double> real(static_cast<std::size_t>(size));
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(half_size()));
  auto* cplx = reinterpret_cast<fftw_complex*>(spec.data());

  std::lock_guard lock(planner_mutex());
  forward_plan_ = fftw_plan_dft_r2c_1d(size, real.data(), cplx, kPlanFlags);
  inverse_plan_ = fftw_plan_dft_c2r_1d(size, cplx, real.data(), kPlanFlags);
  if (forward_plan_ == nullptr || inverse_plan_ == nullptr) {
    throw Error("FFTW failed to create a plan of size " + std::to_string(size));
  }
}

RealFft::~RealFft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
}

void RealFft::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
  // FFTW's new-array interface takes a non-const input; r2c leaves it intact.
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void RealFft::inverse(std::span<std::complex<double>> in, std::span<double> out) const {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_plan_),
                       reinterpret_cast<fftw_complex*>(in.data()), out.data());
}

std::shared_ptr<const RealFft> shared_fft(int size) {
  static std::mutex cache_mutex;
  static std::map<int, std::shared_ptr<const RealFft>> cache;
  std::lock_guard lock(cache_mutex);
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  auto fft = std::make_shared<const RealFft>(size);
  cache.emplace(size, fft);
  return fft;
}

}  // namespace fracwave
