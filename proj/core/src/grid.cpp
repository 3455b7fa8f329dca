#include "whlab/grid.hpp"

#include <cmath>

namespace whlab {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

Grid Grid::full(double x_max, int n) {
  if (!power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
  if (!(x_max > 0)) throw std::invalid_argument("x_max must be positive");
  return Grid{x_max, n, false};
}

Grid Grid::half(double x_max, int n) {
  if (!power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
  if (!(x_max > 0)) throw std::invalid_argument("x_max must be positive");
  return Grid{x_max, n, true};
}

std::vector<double> Grid::points() const {
  std::vector<double> p(n);
  for (int j = 0; j < n; ++j) p[j] = point(j);
  return p;
}

Grid Grid::full_embedding() const {
  if (!half_line) throw std::logic_error("full_embedding: grid already full-line");
  return Grid::full(x_max, 2 * n);
}

Grid Grid::dual() const {
  if (half_line) throw std::logic_error("dual: half-line grid has no DFT dual");
  const double pi = std::acos(-1.0);
  return Grid::full(pi / spacing(), n);
}

LabGrid LabGrid::make(double x_max, int n) {
  LabGrid g;
  g.half = Grid::half(x_max, n);
  g.full = g.half.full_embedding();
  g.dual = g.full.dual();
  return g;
}

}  // namespace whlab
