#include "ptweyl/intertwine.hpp"

#include <algorithm>
#include <cmath>

#include "ptweyl/errors.hpp"
#include "ptweyl/stencil.hpp"

namespace ptweyl {

IntertwinerCoeffs make_coeffs(cplx b1, cplx s, double a, double mu) {
  const double v1 = a * a, v2 = a * mu;
  return {b1, I * s, s, 2.0 * b1 * s - v2 - s * mu, b1 * b1 + s * s - b1 * mu - v1, false};
}

std::vector<IntertwinerCoeffs> solve_bs_constraints(double a, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidModel("constraint system needs mu > 0");
  if (!std::isfinite(a)) throw InvalidModel("coupling a must be finite");
  const double v1 = a * a, v2 = a * mu;
  // u = 2 b1 - mu turns the pair into u^4 - (mu^2 + 4 V1) u^2 + 4 V2^2 = 0.
  // Since V2^2 = V1 mu^2 the discriminant is the square of 4 V1 - mu^2.
  const double p = mu * mu + 4.0 * v1;
  const double root = 4.0 * v1 - mu * mu;
  const double u2s[2] = {(p - root) / 2.0, (p + root) / 2.0};
  const bool double_root = std::abs(root) <= 1e-14 * p;
  std::vector<IntertwinerCoeffs> out;
  for (double u2 : u2s) {
    const double u = std::sqrt(std::max(u2, 0.0));
    if (u > 1e-14 * mu) {
      for (double uu : {-u, u}) {
        IntertwinerCoeffs c = make_coeffs((uu + mu) / 2.0, v2 / uu, a, mu);
        c.degenerate = double_root;
        out.push_back(c);
      }
    } else {
      // u = 0 forces V2 = 0; then s^2 = V1 + mu^2 / 4.
      const double s = std::sqrt(v1 + mu * mu / 4.0);
      for (double ss : {-s, s}) {
        IntertwinerCoeffs c = make_coeffs(mu / 2.0, ss, a, mu);
        c.degenerate = true;
        out.push_back(c);
      }
    }
  }
  return out;
}

cplx u_family(const IntertwinerCoeffs &c, double a, double mu, double x) {
  const double v2 = a * mu;
  const double s = sech(mu * x), t = std::tanh(mu * x);
  return I * (2.0 * c.s * mu + v2) * s * t - (v2 * v2 / (mu * mu) + 2.0 * c.b1 * mu) * s * s;
}

Potential u_family_potential(const IntertwinerCoeffs &c, double a, double mu) {
  return [c, a, mu](double x) { return u_family(c, a, mu, x); };
}

std::vector<UFamilyMember> u_family_members(double a, double mu) {
  std::vector<UFamilyMember> out;
  auto close = [](cplx x, cplx y) { return std::abs(x - y) <= 1e-12 * (1.0 + std::abs(y)); };
  for (const auto &c : solve_bs_constraints(a, mu)) {
    const auto [A1, A2] = scarf_couplings_from_intertwiner(c.b1, c.s, a, mu);
    std::string label;
    if (close(c.b1, 0.0) && close(c.s, -a)) label = "equals_v1";
    else if (close(c.b1, mu) && close(c.s, a)) label = "deepened";
    else if (close(c.b1, (mu - 2.0 * a) / 2.0) && close(c.s, -mu / 2.0)) label = "half_minus";
    else if (close(c.b1, (mu + 2.0 * a) / 2.0) && close(c.s, mu / 2.0)) label = "half_plus";
    out.push_back({c.b1, c.s, A1, A2, label});
  }
  return out;
}

std::pair<cplx, cplx> quoted_u_coefficients(const std::string &label, double a, double mu) {
  if (label == "equals_v1") return {-a * a, -I * a * mu};
  if (label == "deepened") return {-(a * a + 2.0 * mu * mu), 3.0 * I * a * mu};
  if (label == "half_minus") return {-(a * a + mu - 2.0 * a * mu), I * (-mu * mu + a * mu)};
  if (label == "half_plus") return {-(a * a + mu + 2.0 * a * mu), I * (mu * mu + a * mu)};
  throw PreconditionError("unknown U family label '" + label + "'");
}

EtaOperator EtaOperator::eta1(const IntertwinerCoeffs &c, double mu) {
  const cplx b1 = c.b1, s = c.s;
  FirstOrderFactor f{[=](double x) { return b1 * std::tanh(mu * x) + I * s * sech(mu * x); },
                     [=](double x) {
                       const double se = sech(mu * x), t = std::tanh(mu * x);
                       return b1 * mu * se * se - I * s * mu * se * t;
                     }};
  return {EtaKind::eta1, f, {}};
}

EtaOperator EtaOperator::eta2(double a, double mu) {
  FirstOrderFactor f{[=](double x) { return I * a * sech(mu * x); },
                     [=](double x) { return -I * a * mu * sech(mu * x) * std::tanh(mu * x); }};
  return {EtaKind::eta2, f, {}};
}

EtaOperator EtaOperator::composite(const EtaOperator &outer, const EtaOperator &inner) {
  if (outer.kind == EtaKind::composite || inner.kind == EtaKind::composite || outer.kind == EtaKind::identity ||
      inner.kind == EtaKind::identity)
    throw PreconditionError("composite needs two first-order factors");
  return {EtaKind::composite, inner.first, outer.first};
}

EtaOperator EtaOperator::first_order(FirstOrderFactor f) { return {EtaKind::eta1, std::move(f), {}}; }

EtaOperator EtaOperator::identity() { return {EtaKind::identity, {}, {}}; }

namespace {

CVector apply_factor(const FirstOrderFactor &f, const Grid &grid, const CVector &psi) {
  CVector d = derivative4(psi, grid.h());
  for (int i = 0; i < grid.n(); ++i) d[i] += f.g(grid.x(i)) * psi[i];
  return d;
}

BandMatrix factor_matrix(const FirstOrderFactor &f, const Grid &grid, int order) {
  BandMatrix m = first_derivative_matrix(grid.n(), grid.h(), order);
  CVector g(grid.n());
  for (int i = 0; i < grid.n(); ++i) g[i] = f.g(grid.x(i));
  m.add_diagonal(g);
  return m;
}

double vec_norm(const CVector &v, int r0, int r1) {
  double s = 0.0;
  for (int i = r0; i < r1; ++i) s += std::norm(v[i]);
  return std::sqrt(s);
}

double bank_residual(const BandMatrix &lhs, const Grid &grid, double mu) {
  // Rows whose stencils reach past the truncated edge are excluded.
  const int skip = lhs.bandwidth();
  double worst = 0.0;
  for (const auto &psi : test_bank(grid, mu)) {
    const CVector r = lhs.apply(psi);
    worst = std::max(worst, vec_norm(r, skip, grid.n() - skip) / vec_norm(psi, 0, grid.n()));
  }
  return worst;
}

} // namespace

CVector eta_apply(const EtaOperator &op, const Grid &grid, const CVector &psi) {
  if (int(psi.size()) != grid.n()) throw PreconditionError("psi length differs from grid");
  if (grid.n() < 7) throw PreconditionError("eta_apply needs at least 7 grid points");
  switch (op.kind) {
  case EtaKind::identity: return psi;
  case EtaKind::composite: return apply_factor(op.second, grid, apply_factor(op.first, grid, psi));
  default: return apply_factor(op.first, grid, psi);
  }
}

BandMatrix eta_matrix(const EtaOperator &op, const Grid &grid, int order) {
  switch (op.kind) {
  case EtaKind::identity: {
    BandMatrix m(grid.n(), 0);
    m.add_diagonal(CVector(grid.n(), 1.0));
    return m;
  }
  case EtaKind::composite: return factor_matrix(op.second, grid, order) * factor_matrix(op.first, grid, order);
  default: return factor_matrix(op.first, grid, order);
  }
}

BandMatrix hamiltonian_matrix(const Potential &u, const Grid &grid, int order) {
  BandMatrix m = second_derivative_matrix(grid.n(), grid.h(), order).scaled(-1.0);
  CVector d(grid.n());
  for (int i = 0; i < grid.n(); ++i) d[i] = u(grid.x(i));
  m.add_diagonal(d);
  return m;
}

std::vector<CVector> test_bank(const Grid &grid, double mu) {
  std::vector<CVector> bank;
  for (double w : {0.5, 1.0, 2.0})
    for (double c : {0.0, 0.5}) {
      CVector v(grid.n());
      const double ww = w / mu, cc = c / mu;
      for (int i = 0; i < grid.n(); ++i) {
        const double x = grid.x(i) - cc;
        v[i] = std::exp(-x * x / (2.0 * ww * ww));
      }
      bank.push_back(std::move(v));
    }
  return bank;
}

double intertwining_residual(const Potential &u_left, const Potential &u_right, const EtaOperator &op,
                             const Grid &grid, double mu) {
  const BandMatrix e = eta_matrix(op, grid, 2);
  const BandMatrix lhs = e * hamiltonian_matrix(u_left, grid, 2) - hamiltonian_matrix(u_right, grid, 2) * e;
  return bank_residual(lhs, grid, mu);
}

double pseudo_hermiticity_residual(const Potential &u, const EtaOperator &op, const Grid &grid, double mu) {
  const BandMatrix e = eta_matrix(op, grid, 2);
  const BandMatrix h = hamiltonian_matrix(u, grid, 2);
  return bank_residual(e * h - h.adjoint() * e, grid, mu);
}

SuperpotentialSpec superpotential_for_u(double a, double mu) {
  if (!(mu > 0.0)) throw InvalidModel("mu must be positive");
  FieldProfile p = scarf2_profile(-a, mu);
  p.name = "scarf2-reflected";
  return {0.0, p};
}

SpectralShiftReport spectral_shift_check(const Potential &u_h, const Potential &u_h2, double tol, const Grid &grid,
                                         const std::optional<EtaOperator> &eta, const OracleOptions &opts) {
  const auto sh = bound_states(u_h, grid, opts);
  const auto s2 = bound_states(u_h2, grid, opts);
  SpectralShiftReport rep{{}, {}, {}, "none", true, 0.0};
  std::vector<bool> used(s2.size(), false);
  // Full grid with zero Dirichlet ends so eta can be applied.
  auto embed = [&](const CVector &v) {
    CVector f(grid.n(), 0.0);
    std::copy(v.begin(), v.end(), f.begin() + 1);
    return f;
  };
  for (const auto &a : sh) {
    int best = -1;
    double bd = 0.0;
    for (std::size_t j = 0; j < s2.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(a.value - s2[j].value);
      if (best < 0 || d < bd) {
        best = int(j);
        bd = d;
      }
    }
    if (best < 0 || bd > tol) {
      rep.unmatched_h.push_back(a.value);
      continue;
    }
    used[best] = true;
    double col = -1.0;
    if (eta) {
      const CVector m = eta_apply(*eta, grid, embed(a.vector));
      const CVector t = embed(s2[best].vector);
      cplx dot = 0.0;
      double nm = 0.0, nt = 0.0;
      for (int i = 0; i < grid.n(); ++i) {
        dot += std::conj(m[i]) * t[i];
        nm += std::norm(m[i]);
        nt += std::norm(t[i]);
      }
      if (nm > 0.0 && nt > 0.0) col = std::sqrt(std::max(0.0, 1.0 - std::norm(dot) / (nm * nt)));
      else col = 1.0;
      rep.max_collinearity = std::max(rep.max_collinearity, col);
    }
    rep.pairs.push_back({a.value, s2[best].value, bd, col});
  }
  for (std::size_t j = 0; j < s2.size(); ++j)
    if (!used[j]) rep.unmatched_h2.push_back(s2[j].value);
  const std::size_t extra = rep.unmatched_h.size() + rep.unmatched_h2.size();
  if (!rep.unmatched_h.empty() && !rep.unmatched_h2.empty()) rep.extra_level_side = "both";
  else if (!rep.unmatched_h.empty()) rep.extra_level_side = "H";
  else if (!rep.unmatched_h2.empty()) rep.extra_level_side = "H2";
  rep.shift_ok = extra <= 1;
  return rep;
}

} // namespace ptweyl
