#pragma once

#include <random>

#include "fracwave/fields.hpp"

namespace fracwave {

/// Real random trigonometric polynomial: coefficients uniform in the unit
/// square scaled by decay^|k|, Hermitian-symmetric, real mean.
SpectralField random_real_field(const Domain& domain, std::mt19937_64& rng, double decay = 1.0);

}  // namespace fracwave
