#include "fracwave/domain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracwave/error.hpp"

namespace fracwave {

Domain::Domain(double x_left, double length, int modes, int grid)
    : x_left_(x_left), length_(length), modes_(modes), grid_(grid) {
  if (!std::isfinite(x_left) || !std::isfinite(length) || !(length > 0.0)) {
    throw DomainError("domain length must be finite and positive");
  }
  if (modes < 1) {
    throw DomainError("domain needs at least one Fourier mode");
  }
  if (grid < 3 * modes + 1) {
    throw ResolutionError("grid of " + std::to_string(grid) +
                          " points cannot dealias " + std::to_string(modes) +
                          " modes (need >= " + std::to_string(3 * modes + 1) + ")");
  }
}

Domain Domain::padded(double x_left, double length, int modes) {
  return Domain(x_left, length, modes, 3 * modes + 1);
}

Domain Domain::from_nodes(double x_left, double length, int nodes) {
  if (nodes < 4) {
    throw ResolutionError("need at least 4 grid nodes, got " + std::to_string(nodes));
  }
  return Domain(x_left, length, (nodes - 1) / 3, nodes);
}

Domain Domain::with_modes(int modes) const {
  return Domain(x_left_, length_, modes, std::max(grid_, 3 * modes + 1));
}

}  // namespace fracwave
