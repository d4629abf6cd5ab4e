#include "ptweyl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "ptweyl/errors.hpp"
#include "ptweyl/stencil.hpp"

namespace ptweyl {

namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

bool tridiagonal_symmetric(const BandMatrix &m) {
  if (m.bandwidth() != 1) return false;
  for (int i = 0; i + 1 < m.size(); ++i)
    if (m.get(i, i + 1) != m.get(i + 1, i)) return false;
  return true;
}

// LU of (M - shift) in LAPACK band storage, reused across iterations.
class BandSolver {
public:
  BandSolver(const BandMatrix &m, cplx shift) : n_(m.size()), k_(m.bandwidth()), ld_(3 * k_ + 1) {
    ab_.assign(std::size_t(ld_) * n_, 0.0);
    ipiv_.resize(n_);
    for (int j = 0; j < n_; ++j)
      for (int i = std::max(0, j - k_); i <= std::min(n_ - 1, j + k_); ++i)
        ab_[std::size_t(j) * ld_ + (2 * k_ + i - j)] = m.get(i, j) - (i == j ? shift : cplx(0.0));
    const lapack_int info = LAPACKE_zgbtrf(LAPACK_COL_MAJOR, n_, n_, k_, k_, ab_.data(), ld_, ipiv_.data());
    if (info < 0) throw NumericFailure("band LU argument error");
    singular_ = info > 0;
  }
  bool singular() const { return singular_; }
  void solve(CVector &b) const {
    const lapack_int info = LAPACKE_zgbtrs(LAPACK_COL_MAJOR, 'N', n_, k_, k_, 1, ab_.data(), ld_, ipiv_.data(),
                                           b.data(), n_);
    if (info != 0) throw NumericFailure("band triangular solve failed");
  }

private:
  int n_, k_, ld_;
  CVector ab_;
  std::vector<lapack_int> ipiv_;
  bool singular_ = false;
};

double norm2(const CVector &v) {
  double s = 0.0;
  for (auto x : v) s += std::norm(x);
  return std::sqrt(s);
}

// Inverse iteration from an eigenvalue estimate; refines the value with
// the bilinear Rayleigh quotient (the operators are complex symmetric).
BoundState refine(const BandMatrix &m, cplx lambda, double mnorm) {
  const int n = m.size();
  cplx shift = lambda + cplx(1e-10, 1e-10) * (1.0 + std::abs(lambda));
  BandSolver lu(m, shift);
  if (lu.singular()) lu = BandSolver(m, shift + cplx(1e-8, 1e-8) * (1.0 + std::abs(lambda)));
  CVector v(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * std::sin(0.7 * i);
  for (int it = 0; it < 6; ++it) {
    lu.solve(v);
    const double nv = norm2(v);
    if (!(nv > 0.0) || !std::isfinite(nv)) throw NumericFailure("inverse iteration diverged");
    for (auto &x : v) x /= nv;
  }
  const CVector mv = m.apply(v);
  cplx num = 0.0, den = 0.0, hnum = 0.0;
  for (int i = 0; i < n; ++i) {
    num += v[i] * mv[i];
    den += v[i] * v[i];
    hnum += std::conj(v[i]) * mv[i];
  }
  const cplx val = std::abs(den) > 1e-8 ? num / den : hnum;
  double r = 0.0;
  for (int i = 0; i < n; ++i) r += std::norm(mv[i] - val * v[i]);
  return {val, v, std::sqrt(r) / mnorm};
}

} // namespace

OperatorMatrix discretize_schrodinger(const Potential &u, const Grid &grid, int order) {
  if (order != 2 && order != 4) throw PreconditionError("stencil order must be 2 or 4");
  const int n = grid.interior();
  BandMatrix m = second_derivative_matrix(n, grid.h(), order).scaled(-1.0);
  CVector d(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i + 1);
    d[i] = u(x);
    if (!finite(d[i])) throw EvaluationError("non-finite potential", x);
  }
  m.add_diagonal(d);
  return {std::move(m), grid, order, Boundary::dirichlet};
}

std::vector<BoundState> bound_states(const Potential &u, const Grid &grid, const OracleOptions &opts) {
  const double xl = grid.x(1), xr = grid.x(grid.n() - 2);
  const double edge = std::max(std::abs(u(xl)), std::abs(u(xr)));
  if (!(edge < opts.decay_tol))
    throw DomainTooSmall("|U| = " + std::to_string(edge) + " at the outermost interior points exceeds " +
                         std::to_string(opts.decay_tol) + "; increase the grid half-width l");
  const OperatorMatrix op = discretize_schrodinger(u, grid, opts.order);
  const BandMatrix &m = op.m;
  const int n = m.size();

  CVector values;
  bool done = false;
  if (!opts.force_dense && tridiagonal_symmetric(m)) {
    CVector diag(n), off(n - 1);
    for (int i = 0; i < n; ++i) diag[i] = m.get(i, i);
    for (int i = 0; i + 1 < n; ++i) off[i] = m.get(i, i + 1);
    try {
      values = eig_symmetric_tridiagonal(diag, off);
      done = true;
    } catch (const NumericFailure &) {
      done = false;
    }
  }
  if (!done) values = eig_complex_dense(op, false).values;

  const double mnorm = std::max(m.inf_norm(), 1e-300);
  std::vector<BoundState> out;
  for (auto lam : values) {
    if (!(lam.real() < -opts.delta)) continue;
    BoundState s = refine(m, lam, mnorm);
    if (s.residual > 1e-8) continue;
    double vmax = 0.0;
    for (auto x : s.vector) vmax = std::max(vmax, std::abs(x));
    const double amp = std::max(std::abs(s.vector.front()), std::abs(s.vector.back()));
    if (amp >= opts.boundary_amp * vmax) continue;
    if (!(s.value.real() < -opts.delta)) continue;
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const BoundState &a, const BoundState &b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  // Two estimates converging to one eigenpair collapse into one entry.
  std::vector<BoundState> uniq;
  for (auto &s : out)
    if (uniq.empty() || std::abs(uniq.back().value - s.value) > 1e-9 * (1.0 + std::abs(s.value)))
      uniq.push_back(std::move(s));
  return uniq;
}

CVector bound_spectrum(const Potential &u, const Grid &grid, const OracleOptions &opts) {
  CVector v;
  for (const auto &s : bound_states(u, grid, opts)) v.push_back(s.value);
  return v;
}

bool SpectrumReport::all_matched() const {
  return std::all_of(entries.begin(), entries.end(), [](const SpectrumEntry &e) { return e.matched; });
}

SpectrumReport match_spectra(const CVector &closed, const CVector &numeric, double tol) {
  std::vector<int> order(closed.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::abs(closed[a]) < std::abs(closed[b]); });
  std::vector<bool> claimed(numeric.size(), false);
  SpectrumReport rep;
  for (int ci : order) {
    int best = -1;
    double bd = 0.0;
    for (std::size_t j = 0; j < numeric.size(); ++j) {
      if (claimed[j]) continue;
      const double d = std::abs(numeric[j] - closed[ci]);
      if (best < 0 || d < bd) {
        best = int(j);
        bd = d;
      }
    }
    if (best >= 0 && bd <= tol) {
      claimed[best] = true;
      rep.entries.push_back({closed[ci], numeric[best], bd, true});
    } else {
      rep.entries.push_back({closed[ci], cplx(NAN, NAN), NAN, false});
    }
  }
  for (std::size_t j = 0; j < numeric.size(); ++j)
    if (!claimed[j]) rep.unmatched_numeric.push_back(numeric[j]);
  return rep;
}

ConvergenceResult convergence_study(const std::string &name, const std::function<double(const Grid &)> &quantity,
                                    const std::vector<Grid> &grids) {
  if (grids.size() < 3) throw PreconditionError("convergence study needs at least three grids");
  for (std::size_t i = 0; i + 1 < grids.size(); ++i) {
    const double q = grids[i].h() / grids[i + 1].h();
    if (std::abs(q - 2.0) > 1e-9) throw PreconditionError("convergence study grids must halve h");
  }
  ConvergenceResult r{name, {}, {}, {}, false};
  for (const auto &g : grids) {
    r.h.push_back(g.h());
    r.errors.push_back(quantity(g));
  }
  for (std::size_t i = 0; i + 1 < r.errors.size(); ++i) {
    const double a = r.errors[i], b = r.errors[i + 1];
    r.ratios.push_back(b != 0.0 ? a / b : INFINITY);
    if (!(b < a)) r.inconclusive = true;
  }
  return r;
}

std::function<double(const Grid &)> eigenvalue_error(const Potential &u, cplx exact, OracleOptions opts) {
  return [u, exact, opts](const Grid &g) {
    const CVector v = bound_spectrum(u, g, opts);
    if (v.empty()) throw NumericFailure("no bound state found for the convergence study");
    double best = INFINITY;
    for (auto x : v) best = std::min(best, std::abs(x - exact));
    return best;
  };
}

} // namespace ptweyl
