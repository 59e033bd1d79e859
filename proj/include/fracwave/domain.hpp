#pragma once

#include <numbers>

namespace fracwave {

/// Periodic interval [x_left, x_left + length) discretized with Fourier modes
/// |k| <= modes and a physical collocation grid of `grid` points.
///
/// The grid always satisfies grid >= 3*modes + 1 so that quadratic products
/// evaluated pointwise on it carry no aliasing into the retained modes.
class Domain {
 public:
  Domain(double x_left, double length, int modes, int grid);

  /// Smallest dealiasing grid for the given mode count.
  static Domain padded(double x_left, double length, int modes);

  /// Grid of `nodes` points holding the largest dealiased mode set,
  /// modes = (nodes - 1) / 3.
  static Domain from_nodes(double x_left, double length, int nodes);

  double x_left() const noexcept { return x_left_; }
  double length() const noexcept { return length_; }
  int modes() const noexcept { return modes_; }
  int grid() const noexcept { return grid_; }
  int coefficient_count() const noexcept { return 2 * modes_ + 1; }

  /// Physical wavenumber 2*pi*k/L; exactly zero for k = 0.
  double wavenumber(int k) const noexcept {
    return k == 0 ? 0.0 : 2.0 * std::numbers::pi * k / length_;
  }

  /// Largest resolved wavenumber, 2*pi*modes/L.
  double k_max() const noexcept { return wavenumber(modes_); }

  /// Position of node j on a uniform grid of `points` nodes.
  double node(int j, int points) const noexcept {
    return x_left_ + length_ * j / points;
  }
  double node(int j) const noexcept { return node(j, grid_); }

  /// Same interval with a different mode count; the grid grows if the new
  /// mode count needs more dealiasing headroom.
  Domain with_modes(int modes) const;

  /// Same interval and modes on a different (still dealiasing) grid.
  Domain with_grid(int grid) const { return Domain(x_left_, length_, modes_, grid); }

  /// Same interval geometry, ignoring resolution.
  bool same_interval(const Domain& other) const noexcept {
    return x_left_ == other.x_left_ && length_ == other.length_;
  }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  double x_left_;
  double length_;
  int modes_;
  int grid_;
};

}  // namespace fracwave
