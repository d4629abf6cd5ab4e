#pragma once

#include <Eigen/Dense>

#include "ptweyl/types.hpp"

namespace ptweyl {

// Square complex band matrix, half-bandwidth b. Row-major, one row of
// 2b+1 slots per matrix row; slot b is the diagonal.
class BandMatrix {
public:
  BandMatrix() = default;
  BandMatrix(int n, int b);

  int size() const { return n_; }
  int bandwidth() const { return b_; }

  bool in_band(int i, int j) const { return j - i <= b_ && i - j <= b_ && i >= 0 && j >= 0 && i < n_ && j < n_; }
  cplx get(int i, int j) const;
  void set(int i, int j, cplx v);
  void add(int i, int j, cplx v);
  void add_diagonal(const CVector &d);

  CVector apply(const CVector &x) const;
  BandMatrix operator*(const BandMatrix &o) const;
  BandMatrix operator+(const BandMatrix &o) const;
  BandMatrix operator-(const BandMatrix &o) const;
  BandMatrix scaled(cplx s) const;
  BandMatrix adjoint() const;
  BandMatrix transpose() const;

  // max_i sum_j |a_ij|, rows restricted to [r0, r1).
  double inf_norm(int r0 = 0, int r1 = -1) const;
  bool is_finite() const;

  Eigen::MatrixXcd dense() const;

private:
  int n_ = 0;
  int b_ = 0;
  CVector data_;
};

} // namespace ptweyl
