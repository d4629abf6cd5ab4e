#include "ptweyl/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace ptweyl {

void Poly::trim() {
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
  if (c_.empty()) c_.push_back(0.0);
}

int Poly::degree() const {
  if (c_.size() == 1 && c_[0] == 0.0) return -1;
  return int(c_.size()) - 1;
}

int Poly::numeric_degree(double tol) const {
  double m = 0.0;
  for (auto v : c_) m = std::max(m, std::abs(v));
  if (m == 0.0) return -1;
  for (int k = int(c_.size()) - 1; k >= 0; --k)
    if (std::abs(c_[k]) > tol * m) return k;
  return -1;
}

cplx Poly::operator()(cplx z) const {
  cplx s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * z + *it;
  return s;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  CVector d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly &o) const {
  CVector r(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(int(k)) + o.coeff(int(k));
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly &o) const { return *this + o * cplx(-1.0); }

Poly Poly::operator*(const Poly &o) const {
  CVector r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(cplx s) const {
  CVector r = c_;
  for (auto &v : r) v *= s;
  return Poly(std::move(r));
}

} // namespace ptweyl
