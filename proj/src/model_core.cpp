#include "ptweyl/model_core.hpp"

#include <algorithm>
#include <cmath>

#include "ptweyl/errors.hpp"
#include "ptweyl/grid.hpp"
#include "ptweyl/stencil.hpp"

namespace ptweyl {

namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

cplx checked(cplx v, const char *what, double x) {
  if (!finite(v)) throw EvaluationError(what, x);
  return v;
}

} // namespace

void ScarfModel::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidModel("Scarf model needs mu > 0");
  if (!std::isfinite(a)) throw InvalidModel("Scarf model coupling a must be finite");
  if (!std::isfinite(k)) throw InvalidModel("Scarf model wavenumber k must be finite");
}

SuperpotentialSpec ScarfModel::superpotential() const {
  validate();
  return {k_absorbed ? 0.0 : k, scarf2_profile(a, mu)};
}

std::string to_string(PotentialLabel l) {
  switch (l) {
  case PotentialLabel::V1: return "V1";
  case PotentialLabel::V2: return "V2";
  case PotentialLabel::U: return "U";
  case PotentialLabel::Veff: return "Veff";
  }
  return "?";
}

std::vector<ComplexPotentialSample> sample_potential(const Potential &p, const RVector &xs, PotentialLabel label) {
  std::vector<ComplexPotentialSample> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back({x, checked(p(x), "non-finite potential", x), label});
  return out;
}

cplx superpotential_eval(const SuperpotentialSpec &spec, double x) {
  if (!std::isfinite(x)) throw PreconditionError("superpotential queried at non-finite x");
  const cplx ay = checked(spec.a_y.value(x), "non-finite vector potential", x);
  return spec.k + I * ay;
}

cplx superpotential_derivative(const SuperpotentialSpec &spec, double x) {
  if (!spec.a_y.has_derivative())
    throw UnsupportedProfile("profile '" + spec.a_y.name + "' has no analytic derivative");
  return I * checked(spec.a_y.derivative(x), "non-finite vector potential derivative", x);
}

std::pair<cplx, cplx> partner_potentials(const SuperpotentialSpec &spec, double x) {
  if (!spec.a_y.has_derivative())
    throw UnsupportedProfile("profile '" + spec.a_y.name + "' has no analytic derivative");
  const cplx w = superpotential_eval(spec, x);
  const cplx dw = superpotential_derivative(spec, x);
  return {w * w + dw, w * w - dw};
}

std::pair<cplx, cplx> scarf2_potentials(const ScarfModel &m, double x) {
  m.validate();
  const double s = sech(m.mu * x), t = std::tanh(m.mu * x);
  const double even = -m.a * m.a * s * s;
  const double odd = m.a * m.mu * s * t;
  if (!m.k_absorbed && m.k != 0.0) return partner_potentials(m.superpotential(), x);
  return {cplx(even, -odd), cplx(even, odd)};
}

double magnetic_field(const ScarfModel &m, double x) {
  m.validate();
  return -m.a * m.mu * sech(m.mu * x) * std::tanh(m.mu * x);
}

double pt_symmetry_residual(const Potential &v, const RVector &grid) {
  require_symmetric(grid);
  double r = 0.0;
  for (double x : grid) {
    const cplx a = checked(v(x), "non-finite potential", x);
    const cplx b = checked(v(-x), "non-finite potential", -x);
    r = std::max(r, std::abs(a - std::conj(b)));
  }
  return r;
}

Mat2 FirstOrderDiracOp::sigma1() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
Mat2 FirstOrderDiracOp::sigma2() { return {{{0.0, -I}, {I, 0.0}}}; }
Mat2 FirstOrderDiracOp::sigma3() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }
Mat2 FirstOrderDiracOp::gamma0() { return sigma3(); }
Mat2 FirstOrderDiracOp::gamma1() { return {{{0.0, I}, {I, 0.0}}}; }
Mat2 FirstOrderDiracOp::gamma5() {
  const Mat2 g0 = gamma0(), g1 = gamma1();
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = I * (g0[i][0] * g1[0][j] + g0[i][1] * g1[1][j]);
  return r;
}

BandMatrix FirstOrderDiracOp::discretize(const RVector &grid, bool negate_field) const {
  const int n = int(grid.size());
  const double h = uniform_spacing(grid);
  // Bandwidth n + 1 covers the off-diagonal blocks.
  BandMatrix m(2 * n, n + 1);
  const double sgn = negate_field ? -1.0 : 1.0;
  for (int i = 0; i < n; ++i) {
    const cplx w = sgn * checked(this->w(grid[i]), "non-finite superpotential", grid[i]);
    m.add(i, n + i, w);
    m.add(n + i, i, w);
    if (i > 0) {
      m.add(i, n + i - 1, -0.5 / h);
      m.add(n + i, i - 1, 0.5 / h);
    }
    if (i + 1 < n) {
      m.add(i, n + i + 1, 0.5 / h);
      m.add(n + i, i + 1, -0.5 / h);
    }
  }
  return m;
}

double c_anti_symmetry_residual(const FirstOrderDiracOp &op, const RVector &grid, ChargeFlip flip) {
  require_symmetric(grid);
  const int n = int(grid.size());
  const BandMatrix h = op.discretize(grid);
  const BandMatrix hf = op.discretize(grid, flip == ChargeFlip::negate_field);
  // C = gamma5 (x) R acting on (psi1, psi2); C^-1 = gamma5^-1 (x) R.
  const Mat2 g = FirstOrderDiracOp::gamma5();
  const cplx det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const Mat2 gi = {{{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}}};
  // C H C^-1 block (a, b) = sum_cd g_ac (R H_cd R) gi_db; every block of H
  // is tridiagonal, so only |i - j| <= 1 is touched.
  BandMatrix conj(2 * n, n + 1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j) {
          cplx s = 0.0;
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d)
              if (g[a][c] != 0.0 && gi[d][b] != 0.0)
                s += g[a][c] * h.get(c * n + (n - 1 - i), d * n + (n - 1 - j)) * gi[d][b];
          if (s != 0.0) conj.add(a * n + i, b * n + j, s);
        }
  return (conj + hf).inf_norm();
}

SpinorSolution spinor_reconstruct(const CVector &psi2, const RVector &grid, cplx eps,
                                  const SuperpotentialSpec &spec) {
  if (eps == 0.0) throw ZeroModeError("spinor reconstruction undefined for eps = 0; treat the zero mode separately");
  if (psi2.size() != grid.size()) throw PreconditionError("psi and grid lengths differ");
  const double h = uniform_spacing(grid);
  const CVector d = derivative4(psi2, h);
  SpinorSolution s{eps, grid, CVector(grid.size()), psi2};
  for (std::size_t i = 0; i < grid.size(); ++i)
    s.psi1[i] = (d[i] + superpotential_eval(spec, grid[i]) * psi2[i]) / eps;
  return s;
}

double spinor_residual(const SpinorSolution &s, const SuperpotentialSpec &spec) {
  const double h = uniform_spacing(s.x);
  const CVector d1 = derivative4(s.psi1, h), d2 = derivative4(s.psi2, h);
  double scale = 0.0, r = 0.0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    scale = std::max({scale, std::abs(s.psi1[i]), std::abs(s.psi2[i])});
    const cplx w = superpotential_eval(spec, s.x[i]);
    r = std::max(r, std::abs(d2[i] + w * s.psi2[i] - s.eps * s.psi1[i]));
    r = std::max(r, std::abs(-d1[i] + w * s.psi1[i] - s.eps * s.psi2[i]));
  }
  if (scale == 0.0) throw PreconditionError("spinor has both components identically zero");
  return r / scale;
}

} // namespace ptweyl
