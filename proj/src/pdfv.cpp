#include "ptweyl/pdfv.hpp"

#include <algorithm>
#include <cmath>

#include "ptweyl/errors.hpp"
#include "ptweyl/stencil.hpp"

namespace ptweyl {

std::string to_string(AnsatzKind k) { return k == AnsatzKind::real ? "real" : "complex"; }

AnsatzKind ansatz_kind_from_string(const std::string &s) {
  if (s == "real") return AnsatzKind::real;
  if (s == "complex") return AnsatzKind::complex;
  throw PreconditionError("ansatz kind must be real or complex, got '" + s + "'");
}

std::string to_string(ConstraintStatus s) {
  return s == ConstraintStatus::solvable_verified ? "solvable-verified" : "experimental";
}

PdfvAnsatz PdfvAnsatz::make(AnsatzKind kind, double alpha, double beta, double mu, cplx a0, cplx a1, cplx a2,
                            double k) {
  PdfvAnsatz a{kind, alpha, beta, mu, a0, a1, a2, 0.0, k};
  a.a3 = kind == AnsatzKind::real ? I * a2 + k : I * (a2 - k);
  a.validate();
  return a;
}

void PdfvAnsatz::validate() const {
  if (alpha == 0.0 || !std::isfinite(alpha)) throw InvalidModel("PDFV ansatz needs alpha != 0");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidModel("PDFV ansatz needs mu > 0");
  if (!std::isfinite(beta) || !std::isfinite(k)) throw InvalidModel("PDFV ansatz parameters must be finite");
}

cplx PdfvAnsatz::v(double x) const {
  const cplx b = kind == AnsatzKind::real ? cplx(beta) : I * beta;
  return b + alpha * std::sinh(mu * x);
}
cplx PdfvAnsatz::dv(double x) const { return alpha * mu * std::cosh(mu * x); }
cplx PdfvAnsatz::d2v(double x) const { return alpha * mu * mu * std::sinh(mu * x); }

cplx PdfvAnsatz::a_y(double x) const {
  return a0 * std::tanh(mu * x) + I * a1c * sech(mu * x) + a2c + I * a3;
}

cplx PdfvAnsatz::coupling(double x) const {
  return kind == AnsatzKind::real ? k + I * a_y(x) : k - a_y(x);
}

cplx PdfvAnsatz::dcoupling(double x) const {
  const double s = sech(mu * x), t = std::tanh(mu * x);
  const cplx day = a0 * mu * s * s - I * a1c * mu * s * t;
  return kind == AnsatzKind::real ? I * day : -day;
}

std::vector<ConstraintSet> constraint_sets(AnsatzKind kind, double alpha, double beta, double mu) {
  if (alpha == 0.0) throw InvalidModel("constraint sets need alpha != 0");
  if (!(mu > 0.0)) throw InvalidModel("constraint sets need mu > 0");
  const cplx u = kind == AnsatzKind::real ? I : cplx(1.0);
  return {{u * mu / 2.0, -beta * mu / (2.0 * alpha), ConstraintStatus::solvable_verified},
          {-3.0 * u * mu / 2.0, 5.0 * beta * mu / (6.0 * alpha), ConstraintStatus::experimental}};
}

PdfvAnsatz constrained_ansatz(AnsatzKind kind, double alpha, double beta, double mu, int which, double k) {
  if (which != 0 && which != 1) throw PreconditionError("constraint set index must be 0 or 1");
  const auto cs = constraint_sets(kind, alpha, beta, mu);
  return PdfvAnsatz::make(kind, alpha, beta, mu, cs[which].a0, cs[which].a1, 0.0, k);
}

cplx pdfv_superpotential(const PdfvAnsatz &ans, double x) {
  ans.validate();
  return ans.v(x) * ans.coupling(x);
}

cplx pseudo_potential(const PdfvAnsatz &ans, double x) {
  ans.validate();
  const cplx v = ans.v(x), d1 = ans.dv(x), d2 = ans.d2v(x);
  return -v * d2 / 2.0 - d1 * d1 / 4.0;
}

int sign_of(int which) {
  if (which == 1) return 1;
  if (which == 2) return -1;
  throw PreconditionError("potential index must be 1 or 2");
}

PdfvSystem PdfvSystem::from_ansatz(const PdfvAnsatz &ans) {
  ans.validate();
  return {[ans](double x) { return ans.v(x); }, [ans](double x) { return ans.dv(x); },
          [ans](double x) { return ans.d2v(x); }, [ans](double x) { return ans.coupling(x); },
          [ans](double x) { return ans.dcoupling(x); }};
}

cplx PdfvSystem::effective_potential(int s, double x) const {
  const cplx vv = v(x), v1 = dv(x), v2 = d2v(x), gg = g(x), g1 = dg(x);
  const cplx w = vv * gg;
  return w * w + double(s) * (vv * v1 * gg + vv * vv * g1) - vv * v2 / 2.0 - v1 * v1 / 4.0;
}

cplx eff_potential_definitional(const PdfvAnsatz &ans, int which, double x) {
  return PdfvSystem::from_ansatz(ans).effective_potential(sign_of(which), x);
}

cplx eff_potential_quoted_full(const PdfvAnsatz &ans, double x) {
  ans.validate();
  const double al = ans.alpha, be = ans.beta, mu = ans.mu;
  const cplx A0 = ans.a0, A1 = ans.a1c;
  const double S = sech(mu * x), T = std::tanh(mu * x), SH = std::sinh(mu * x);
  const double S2 = S * S, ST = S * T, T2 = T * T;
  const double al2 = al * al, be2 = be * be, mu2 = mu * mu;
  if (ans.kind == AnsatzKind::real) {
    const cplx sq = A1 * al - I * A0 * be;
    return A1 * al * be * mu - al2 * mu2 / 4.0 + (A1 * A1 * be2 - I * A0 * be2 * mu) * S2 +
           (A1 * al2 * mu - I * A0 * al * be * mu - al * be * mu2 / 2.0) * SH -
           (I * A0 * al2 * mu + 3.0 * al2 * mu2 / 4.0) * SH * SH +
           2.0 * I * (A1 * A1 * al * be / I - A1 * A0 * be2 - A0 * al * be * mu - A1 * be2 * mu / (2.0 * I)) * ST +
           (-(sq * sq - 2.0 * I * A0 * A1 * al * be) - I * A0 * al2 * mu - 2.0 * A1 * al * be * mu) * T2 +
           2.0 * I * (-A0 * A1 * al2 - A0 * A0 * al * be / I - A1 * al2 * mu / 2.0) * SH * T2 -
           A0 * A0 * al2 * SH * SH * T2;
  }
  const cplx sq = A1 * al + A0 * be;
  return -A1 * al * be * mu - al2 * mu2 / 4.0 + (A1 * A1 * be2 - A0 * be2 * mu) * S2 +
         (I * A1 * al2 * mu + A0 * al * be * mu - al * be * mu2 / 2.0) * SH +
         (A0 * al2 * mu - 3.0 * al2 * mu2 / 4.0) * SH * SH +
         2.0 * I * (-A1 * A1 * al * be - A1 * A0 * be2 + A0 * al * be * mu + A1 * be2 * mu / 2.0) * ST +
         (-(-sq * sq - 2.0 * A0 * A1 * al * be) + A0 * al2 * mu + 2.0 * A1 * al * be * mu) * T2 +
         2.0 * I * (A0 * A1 * al2 + A0 * A0 * al * be - A1 * al2 * mu / 2.0) * SH * T2 +
         A0 * A0 * al2 * SH * SH * T2;
}

cplx eff_potential_full(const PdfvAnsatz &ans, int which, double x) {
  if (which != 2) throw PreconditionError("the full expansion exists only for the which = 2 potential");
  const cplx quoted = eff_potential_quoted_full(ans, x);
  const cplx def = eff_potential_definitional(ans, which, x);
  if (std::abs(quoted - def) > 1e-8 * std::max(1.0, std::abs(def))) throw TranscriptionMismatch(quoted, def, x);
  return quoted;
}

cplx eff_potential_simplified(const PdfvAnsatz &ans, int which, double x) {
  ans.validate();
  sign_of(which);
  const auto cs = constraint_sets(ans.kind, ans.alpha, ans.beta, ans.mu)[0];
  const double scale = 1.0 + std::abs(cs.a0) + std::abs(cs.a1);
  if (std::abs(ans.a0 - cs.a0) > 1e-12 * scale || std::abs(ans.a1c - cs.a1) > 1e-12 * scale)
    throw PreconditionError("simplified potentials require the first constraint set for (A0, A1)");
  const double al = ans.alpha, be = ans.beta, mu = ans.mu;
  const double al2 = al * al, be2 = be * be, mu2 = mu * mu;
  const double S = sech(mu * x), T = std::tanh(mu * x), SH = std::sinh(mu * x);
  const double S2 = S * S, ST = S * T;
  if (ans.kind == AnsatzKind::real) {
    if (which == 2) return (-al2 / 4.0 + be2 * be2 / (4.0 * al2)) * mu2 * S2 + be * mu2 / 2.0 * (al + be2 / al) * ST;
    return -(be2 + al2) * mu + (3.0 * al2 * mu2 / 4.0 + be2 * mu2 + be2 * be2 * mu2 / (4.0 * al2)) * S2 -
           al2 * mu2 * SH * SH - al * be / 2.0 * SH * (1.0 + T * T) - be * (al + be2 / (2.0 * al)) * mu2 * ST;
  }
  if (which == 2) return mu2 / 4.0 * (be2 * be2 / al2 - al2) * S2 + I * be * mu2 / 2.0 * (al - be2 / al) * ST;
  return (be2 - al2) * mu + (3.0 * al2 * mu2 / 4.0 - be2 * mu2 + be2 * be2 * mu2 / (4.0 * al2)) * S2 -
         al2 * mu2 * SH * SH - I * al * be / 2.0 * mu2 * SH * (1.0 + T * T) +
         I * be * (-al + be2 / (2.0 * al)) * mu2 * ST;
}

RVector velocity_zero_crossings(const PdfvSystem &sys, const Grid &grid) {
  RVector out;
  cplx prev = sys.v(grid.x(0));
  for (int i = 0; i < grid.n(); ++i) {
    const cplx cur = sys.v(grid.x(i));
    if (cur == 0.0) {
      out.push_back(grid.x(i));
    } else if (i > 0 && prev != 0.0) {
      const cplx t = -prev / (cur - prev);
      if (std::abs(t.imag()) <= 1e-9 * (1.0 + std::abs(t)) && t.real() > 0.0 && t.real() < 1.0)
        out.push_back(grid.x(i - 1) + t.real() * grid.h());
    }
    prev = cur;
  }
  return out;
}

namespace {

void require_nonsingular(const PdfvSystem &sys, const Grid &grid) {
  RVector z = velocity_zero_crossings(sys, grid);
  if (!z.empty()) throw SingularVelocity(std::move(z));
}

} // namespace

CVector pdfv_hamiltonian_apply(const PdfvSystem &sys, int which, const Grid &grid, const CVector &phi) {
  if (int(phi.size()) != grid.n()) throw PreconditionError("phi length differs from grid");
  require_nonsingular(sys, grid);
  const int s = sign_of(which);
  const CVector d1 = derivative4(phi, grid.h()), d2 = second_derivative4(phi, grid.h());
  CVector out(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.x(i);
    const cplx v = sys.v(x), v1 = sys.dv(x);
    out[i] = -v * v * d2[i] - 2.0 * v * v1 * d1[i] + sys.effective_potential(s, x) * phi[i];
  }
  return out;
}

CVector pdfv_hamiltonian_apply(const PdfvAnsatz &ans, int which, const Grid &grid, const CVector &phi) {
  return pdfv_hamiltonian_apply(PdfvSystem::from_ansatz(ans), which, grid, phi);
}

CVector pdfv_original_apply(const PdfvSystem &sys, int which, const Grid &grid, const CVector &psi) {
  if (int(psi.size()) != grid.n()) throw PreconditionError("psi length differs from grid");
  const int s = sign_of(which);
  const CVector d1 = derivative4(psi, grid.h()), d2 = second_derivative4(psi, grid.h());
  CVector out(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.x(i);
    const cplx v = sys.v(x), v1 = sys.dv(x), g = sys.g(x), g1 = sys.dg(x);
    const cplx w = v * g, w1 = v1 * g + v * g1;
    out[i] = -v * v * d2[i] - v * v1 * d1[i] + (w * w + double(s) * v * w1) * psi[i];
  }
  return out;
}

double gauge_route_residual(const PdfvSystem &sys, int which, const Grid &grid, const CVector &phi) {
  require_nonsingular(sys, grid);
  // sqrt(v) followed continuously along the grid.
  CVector root(grid.n());
  for (int i = 0; i < grid.n(); ++i) {
    root[i] = std::sqrt(sys.v(grid.x(i)));
    if (i > 0 && std::abs(root[i] - root[i - 1]) > std::abs(root[i] + root[i - 1])) root[i] = -root[i];
  }
  CVector psi(grid.n());
  double scale = 0.0;
  for (int i = 0; i < grid.n(); ++i) {
    psi[i] = root[i] * phi[i];
    scale = std::max(scale, std::abs(psi[i]));
  }
  if (scale == 0.0) return 0.0;
  const CVector lhs = pdfv_original_apply(sys, which, grid, psi);
  const CVector rhs = pdfv_hamiltonian_apply(sys, which, grid, phi);
  double r = 0.0;
  for (int i = 0; i < grid.n(); ++i) r = std::max(r, std::abs(lhs[i] - root[i] * rhs[i]));
  return r / scale;
}

} // namespace ptweyl
