#include "fracwave/random_fields.hpp"

#include <cmath>

namespace fracwave {

SpectralField random_real_field(const Domain& domain, std::mt19937_64& rng, double decay) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  SpectralField f(domain);
  f[0] = Complex(unit(rng), 0.0);
  for (int k = 1; k <= domain.modes(); ++k) {
    const double scale = std::pow(decay, k);
    const Complex c(scale * unit(rng), scale * unit(rng));
    f[k] = c;
    f[-k] = std::conj(c);
  }
  return f;
}

}  // namespace fracwave
