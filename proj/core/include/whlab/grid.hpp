#pragma once

#include <stdexcept>
#include <vector>

namespace whlab {

/// Uniform grid. Full-line grids cover [-x_max, x_max) with n points
/// x_j = (j - n/2) dx (x = 0 is a grid point); half-line grids cover
/// [0, x_max) with x_j = j dx. n must be a power of two.
struct Grid {
  double x_max = 0.0;
  int n = 0;
  bool half_line = false;

  static Grid full(double x_max, int n);
  static Grid half(double x_max, int n);

  double spacing() const { return (half_line ? 1.0 : 2.0) * x_max / n; }
  double point(int j) const {
    return half_line ? j * spacing() : (j - n / 2) * spacing();
  }
  std::vector<double> points() const;

  /// Full-line embedding of a half-line grid: same spacing, 2n points.
  Grid full_embedding() const;
  /// DFT-dual of a full-line grid: n points, spacing pi / x_max.
  Grid dual() const;

  bool operator==(const Grid& o) const {
    return x_max == o.x_max && n == o.n && half_line == o.half_line;
  }
};

/// The three coupled grids of one half-line discretization: the half-line
/// position grid, its full-line embedding, and the symbol (frequency)
/// domain dual.
struct LabGrid {
  Grid half;
  Grid full;
  Grid dual;
  static LabGrid make(double x_max, int n);
};

}  // namespace whlab
