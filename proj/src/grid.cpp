#include "ptweyl/grid.hpp"

#include <cmath>
#include <string>

#include "ptweyl/errors.hpp"

namespace ptweyl {

Grid::Grid(double l, int n) : l_(l), n_(n) {
  if (!(l > 0.0) || !std::isfinite(l))
    throw InvalidModel("grid half-width must be positive, got " + std::to_string(l));
  if (n < 5 || n % 2 == 0)
    throw InvalidModel("grid point count must be odd and >= 5, got " + std::to_string(n));
  h_ = 2.0 * l / (n - 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_);
  for (int i = 0; i < n_; ++i) xs[i] = x(i);
  return xs;
}

std::vector<double> Grid::interior_points() const {
  std::vector<double> xs(n_ - 2);
  for (int i = 1; i < n_ - 1; ++i) xs[i - 1] = x(i);
  return xs;
}

void require_symmetric(const std::vector<double> &xs, double tol) {
  const std::size_t n = xs.size();
  if (n == 0) throw PreconditionError("empty grid");
  double scale = std::max(std::abs(xs.front()), std::abs(xs.back()));
  if (scale == 0.0) scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(xs[i] + xs[n - 1 - i]) > tol * scale)
      throw PreconditionError("grid is not symmetric about 0 at index " + std::to_string(i));
  }
}

double uniform_spacing(const std::vector<double> &xs) {
  if (xs.size() < 2) throw PreconditionError("grid needs at least two points");
  const double h = (xs.back() - xs.front()) / double(xs.size() - 1);
  if (!(h > 0.0)) throw PreconditionError("grid must be increasing");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (std::abs(xs[i] - xs[i - 1] - h) > 1e-9 * h)
      throw PreconditionError("grid is not uniform at index " + std::to_string(i));
  }
  return h;
}

} // namespace ptweyl
