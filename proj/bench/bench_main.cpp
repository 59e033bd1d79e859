// Throughput of the pseudospectral right-hand side against the direct
// convolution reference, and of the OpenMP kernels against their serial loops.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "fracwave/kernels.hpp"
#include "fracwave/model.hpp"
#include "fracwave/random_fields.hpp"

using namespace fracwave;

namespace {

template <typename Fn>
double seconds_per_call(Fn&& fn, double budget = 0.25) {
  using clock = std::chrono::steady_clock;
  fn();
  long calls = 0;
  const auto start = clock::now();
  double elapsed = 0.0;
  do {
    fn();
    ++calls;
    elapsed = std::chrono::duration<double>(clock::now() - start).count();
  } while (elapsed < budget);
  return elapsed / static_cast<double>(calls);
}

volatile double sink;

}  // namespace

int main(int argc, char** argv) {
  const double budget = argc > 1 ? std::atof(argv[1]) : 0.25;
  std::mt19937_64 rng(7);
  const ModelParams ch = ModelParams::camassa_holm();

  std::printf("threads %d\n\n", omp_get_max_threads());
  std::printf("%-8s %-8s %14s %14s %10s\n", "nodes", "modes", "rhs [s]", "direct [s]", "speedup");
  for (int nodes : {64, 256, 1024, 4096}) {
    const Domain d = Domain::from_nodes(0.0, 50.0, nodes);
    const SpectralField u = random_real_field(d, rng, 0.97);
    FchOperator op(d, ch);
    SpectralField out(d);
    const double fast = seconds_per_call([&] { op.evaluate(u, out); }, budget);
    const double slow = seconds_per_call([&] { sink = rhs_convolution(u, ch)[0].real(); }, budget);
    std::printf("%-8d %-8d %14.3e %14.3e %10.1f\n", nodes, d.modes(), fast, slow, slow / fast);
  }

  std::printf("\n%-10s %-10s %14s %14s %10s\n", "kernel", "size", "openmp [s]", "serial [s]",
              "speedup");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int size : {1 << 12, 1 << 16, 1 << 20}) {
    std::vector<double> a(size), b(size), c(size);
    std::vector<std::complex<double>> x(size), k(size), y(size);
    for (int i = 0; i < size; ++i) {
      a[i] = unit(rng);
      b[i] = unit(rng);
      x[i] = {unit(rng), unit(rng)};
      k[i] = {unit(rng), unit(rng)};
    }
    auto row = [&](const char* name, auto&& par, auto&& ser) {
      const double tp = seconds_per_call(par, budget);
      const double ts = seconds_per_call(ser, budget);
      std::printf("%-10s %-10d %14.3e %14.3e %10.2f\n", name, size, tp, ts, ts / tp);
    };
    row("multiply", [&] { kernels::multiply(a, b, c); },
        [&] { kernels::serial::multiply(a, b, c); });
    row("max_abs", [&] { sink = kernels::max_abs(a); },
        [&] { sink = kernels::serial::max_abs(a); });
    row("axpy", [&] { kernels::axpy(x, 0.5, k, y); },
        [&] { kernels::serial::axpy(x, 0.5, k, y); });
  }
  return 0;
}
