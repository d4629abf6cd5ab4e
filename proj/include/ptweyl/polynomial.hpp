#pragma once

#include <initializer_list>

#include "ptweyl/types.hpp"

namespace ptweyl {

// Complex polynomial, coefficients in ascending powers.
class Poly {
public:
  Poly() : c_{0.0} {}
  Poly(std::initializer_list<cplx> c) : c_(c) { trim(); }
  explicit Poly(CVector c) : c_(std::move(c)) { trim(); }

  const CVector &coeffs() const { return c_; }
  cplx coeff(int k) const { return k < int(c_.size()) ? c_[k] : cplx(0.0); }
  // Degree after dropping exact zeros; the zero polynomial has degree -1.
  int degree() const;
  // Degree ignoring leading coefficients below tol * max|c|.
  int numeric_degree(double tol = 1e-12) const;

  cplx operator()(cplx z) const;
  Poly derivative() const;

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly operator*(cplx s) const;

private:
  void trim();
  CVector c_;
};

} // namespace ptweyl
