#pragma once

#include "fracwave/fields.hpp"

namespace fracwave {

/// Evaluates the truncated Fourier series at M equispaced nodes.
/// Requires M >= 2N+1 (ResolutionError) and Hermitian input (SymmetryError).
PhysicalField to_physical(const SpectralField& f, int samples);

/// Same, on the domain's dealiasing grid.
PhysicalField to_physical(const SpectralField& f);

/// Trapezoidal quadrature of the coefficient integral for |k| <= N; exact for
/// trigonometric polynomials of degree <= N when M >= 2N+1.
SpectralField to_spectral(const PhysicalField& u, int modes);

/// Samples `fn(x)` on the domain's grid and transforms; the discrete
/// projection used for initial data.
template <typename Fn>
SpectralField sample_and_transform(const Domain& domain, Fn&& fn);

/// Keeps |k| <= target. DomainError if target exceeds the field's modes.
SpectralField project(const SpectralField& f, int target);

/// Fractional Laplacian: multiplies c_k by |kappa_k|^alpha. The k = 0 mode is
/// annihilated for every alpha >= 0, including alpha = 0.
SpectralField frac_laplacian(const SpectralField& f, double alpha);

/// Spectral derivative: multiplies c_k by i*kappa_k.
SpectralField derivative(const SpectralField& f);

/// Coefficients |k| <= N of the pointwise product, computed on the
/// dealiasing grid, hence identical to the truncated convolution sum.
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);

/// Pseudospectral product on an arbitrary grid of `grid` >= 2N+1 points.
/// Aliasing-free only when grid >= 3N+1; smaller grids are accepted so the
/// verification suite can demonstrate the aliasing error.
SpectralField pseudospectral_product(const SpectralField& f, const SpectralField& g, int grid);

/// Direct O(N^2) truncated convolution sum_{k+l=m, |k|,|l|<=N} f_k g_l.
SpectralField convolution_oracle(const SpectralField& f, const SpectralField& g);

// Norms. With mean-normalized coefficients Parseval reads ||u||^2 = L sum |c_k|^2.

double l2_norm(const SpectralField& f);
double linf_norm(const PhysicalField& u);
/// Weight (1 + kappa_k^2)^r.
double sobolev_norm(const SpectralField& f, double r);
/// ||D^{alpha/2} f||, weight |kappa_k|^alpha.
double h_alpha_half_seminorm(const SpectralField& f, double alpha);

/// L^2 inner product (f, g) = L sum_k f_k conj(g_k).
Complex inner_product(const SpectralField& f, const SpectralField& g);

/// Same inner product by trapezoidal quadrature on the dealiasing grid; an
/// independent route to inner_product for trigonometric polynomials.
double quadrature_inner_product(const SpectralField& f, const SpectralField& g);

template <typename Fn>
SpectralField sample_and_transform(const Domain& domain, Fn&& fn) {
  std::vector<double> samples(static_cast<std::size_t>(domain.grid()));
  for (int j = 0; j < domain.grid(); ++j) samples[static_cast<std::size_t>(j)] = fn(domain.node(j));
  return to_spectral(PhysicalField(domain, std::move(samples)), domain.modes());
}

}  // namespace fracwave
