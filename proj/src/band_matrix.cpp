#include "ptweyl/band_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "ptweyl/errors.hpp"

namespace ptweyl {

BandMatrix::BandMatrix(int n, int b) : n_(n), b_(b), data_(std::size_t(n) * (2 * b + 1)) {
  if (n < 1 || b < 0) throw PreconditionError("band matrix needs n >= 1 and b >= 0");
}

cplx BandMatrix::get(int i, int j) const {
  if (!in_band(i, j)) return 0.0;
  return data_[std::size_t(i) * (2 * b_ + 1) + (j - i + b_)];
}

void BandMatrix::set(int i, int j, cplx v) {
  if (!in_band(i, j)) throw PreconditionError("band matrix write outside band");
  data_[std::size_t(i) * (2 * b_ + 1) + (j - i + b_)] = v;
}

void BandMatrix::add(int i, int j, cplx v) {
  if (!in_band(i, j)) throw PreconditionError("band matrix write outside band");
  data_[std::size_t(i) * (2 * b_ + 1) + (j - i + b_)] += v;
}

void BandMatrix::add_diagonal(const CVector &d) {
  if (int(d.size()) != n_) throw PreconditionError("diagonal length mismatch");
  for (int i = 0; i < n_; ++i) add(i, i, d[i]);
}

CVector BandMatrix::apply(const CVector &x) const {
  if (int(x.size()) != n_) throw PreconditionError("vector length mismatch in band apply");
  CVector y(n_);
  for (int i = 0; i < n_; ++i) {
    const int j0 = std::max(0, i - b_), j1 = std::min(n_ - 1, i + b_);
    const cplx *row = &data_[std::size_t(i) * (2 * b_ + 1)];
    cplx s = 0.0;
    for (int j = j0; j <= j1; ++j) s += row[j - i + b_] * x[j];
    y[i] = s;
  }
  return y;
}

BandMatrix BandMatrix::operator*(const BandMatrix &o) const {
  if (o.n_ != n_) throw PreconditionError("size mismatch in band product");
  BandMatrix r(n_, std::min(n_ - 1, b_ + o.b_));
  for (int i = 0; i < n_; ++i) {
    for (int k = std::max(0, i - b_); k <= std::min(n_ - 1, i + b_); ++k) {
      const cplx a = get(i, k);
      if (a == 0.0) continue;
      for (int j = std::max(0, k - o.b_); j <= std::min(n_ - 1, k + o.b_); ++j)
        r.add(i, j, a * o.get(k, j));
    }
  }
  return r;
}

BandMatrix BandMatrix::operator+(const BandMatrix &o) const {
  if (o.n_ != n_) throw PreconditionError("size mismatch in band sum");
  BandMatrix r(n_, std::max(b_, o.b_));
  for (int i = 0; i < n_; ++i)
    for (int j = std::max(0, i - r.b_); j <= std::min(n_ - 1, i + r.b_); ++j)
      r.set(i, j, get(i, j) + o.get(i, j));
  return r;
}

BandMatrix BandMatrix::operator-(const BandMatrix &o) const { return *this + o.scaled(-1.0); }

BandMatrix BandMatrix::scaled(cplx s) const {
  BandMatrix r = *this;
  for (auto &v : r.data_) v *= s;
  return r;
}

BandMatrix BandMatrix::adjoint() const {
  BandMatrix r(n_, b_);
  for (int i = 0; i < n_; ++i)
    for (int j = std::max(0, i - b_); j <= std::min(n_ - 1, i + b_); ++j)
      r.set(j, i, std::conj(get(i, j)));
  return r;
}

BandMatrix BandMatrix::transpose() const {
  BandMatrix r(n_, b_);
  for (int i = 0; i < n_; ++i)
    for (int j = std::max(0, i - b_); j <= std::min(n_ - 1, i + b_); ++j)
      r.set(j, i, get(i, j));
  return r;
}

double BandMatrix::inf_norm(int r0, int r1) const {
  if (r1 < 0) r1 = n_;
  double best = 0.0;
  for (int i = std::max(0, r0); i < std::min(n_, r1); ++i) {
    double s = 0.0;
    for (int j = std::max(0, i - b_); j <= std::min(n_ - 1, i + b_); ++j) s += std::abs(get(i, j));
    best = std::max(best, s);
  }
  return best;
}

bool BandMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

Eigen::MatrixXcd BandMatrix::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = std::max(0, i - b_); j <= std::min(n_ - 1, i + b_); ++j) m(i, j) = get(i, j);
  return m;
}

} // namespace ptweyl
