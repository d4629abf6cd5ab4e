#pragma once

#include <vector>

namespace ptweyl {

// Uniform grid on [-l, l] with n points; n odd so x = 0 is a node.
class Grid {
public:
  Grid(double l, int n);

  double l() const { return l_; }
  int n() const { return n_; }
  double h() const { return h_; }
  double x(int i) const { return -l_ + h_ * i; }
  int interior() const { return n_ - 2; }

  std::vector<double> points() const;
  std::vector<double> interior_points() const;

  // Grid with half the spacing on the same interval.
  Grid refined() const { return Grid(l_, 2 * n_ - 1); }

private:
  double l_;
  int n_;
  double h_;
};

// Throws PreconditionError unless xs is uniform and symmetric about 0.
void require_symmetric(const std::vector<double> &xs, double tol = 1e-12);
double uniform_spacing(const std::vector<double> &xs);

} // namespace ptweyl
