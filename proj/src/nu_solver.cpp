#include "ptweyl/nu_solver.hpp"

#include <algorithm>
#include <cmath>

#include "ptweyl/errors.hpp"

namespace ptweyl {

namespace {

constexpr double kSampleZ[] = {-2.1, -0.8, -0.15, 0.0, 0.4, 1.3, 2.7};

cplx inner_root(const NUProblem &p) {
  const cplx d = 4.0 * p.a1 - 1.0;
  return std::sqrt(d * d + 16.0 * p.a2 * p.a2);
}

// t of k = e + t.
cplx k_shift(const NUProblem &p, Branch b) {
  const cplx r = inner_root(p);
  return (-1.0 - 4.0 * p.a1 + (b == Branch::k1 ? -r : r)) / 8.0;
}

double log_cosh(double y) {
  const double a = std::abs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

} // namespace

std::string to_string(Branch b) { return b == Branch::k1 ? "k1" : "k2"; }

Branch branch_from_string(const std::string &s) {
  if (s == "k1") return Branch::k1;
  if (s == "k2") return Branch::k2;
  throw PreconditionError("branch must be k1 or k2, got '" + s + "'");
}

NUProblem NUProblem::from_couplings(cplx A1, cplx A2, double mu) {
  NUProblem p{A1 / (mu * mu), A2 / (mu * mu), mu};
  p.validate();
  return p;
}

void NUProblem::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidModel("NU problem needs mu > 0");
  auto fin = [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); };
  if (!fin(a1) || !fin(a2)) throw InvalidModel("NU couplings must be finite");
}

cplx NUProblem::potential(double x) const {
  const double s = sech(mu * x), t = std::tanh(mu * x);
  return mu * mu * (a1 * s * s + a2 * s * t);
}

Poly NUProblem::sigma_tilde(cplx e) const { return Poly{e - a1, -a2, e}; }

NUReduction nu_reduce(const NUProblem &p, cplx e_bar) {
  p.validate();
  return {p.sigma(), p.tau_tilde(), p.sigma_tilde(e_bar)};
}

std::pair<Affine, Affine> nu_k_roots(const NUProblem &p) {
  p.validate();
  return {Affine{1.0, k_shift(p, Branch::k1)}, Affine{1.0, k_shift(p, Branch::k2)}};
}

NUBranch nu_branch(const NUProblem &p, Branch b) {
  p.validate();
  const cplx t = k_shift(p, b);
  // pi - z/2 = -(p z + q) with p^2 = t + 1/4, q^2 = t + a1, 2 p q = a2.
  const cplx pa = std::sqrt(t + 0.25);
  cplx q = std::sqrt(t + p.a1);
  if (std::abs(2.0 * pa * q - p.a2) > std::abs(-2.0 * pa * q - p.a2)) q = -q;
  const cplx p1 = 0.5 - pa, p0 = -q;
  NUBranch br{b, Affine{1.0, t}, Poly{p0, p1}, Affine{1.0, t + p1}, 1.0 + 2.0 * p1, false, pa, q};
  br.accepted = br.tau_prime.real() < 0.0;
  return br;
}

Poly nu_pi(const NUProblem &p, Branch b) {
  const NUBranch br = nu_branch(p, b);
  if (!br.accepted)
    throw BranchRejected("branch " + to_string(b) + " has Re tau' = " + std::to_string(br.tau_prime.real()) +
                         " >= 0");
  return br.pi;
}

double nu_pi_identity_residual(const NUProblem &p, Branch b, cplx e_bar) {
  const NUBranch br = nu_branch(p, b);
  const Poly half{0.0, 0.5};  // (sigma' - tau~) / 2
  const Poly rhs = half * half - p.sigma_tilde(e_bar) + p.sigma() * br.k(e_bar);
  const Poly d = br.pi - half;
  double r = 0.0;
  for (double z : kSampleZ) {
    const cplx v = rhs(z);
    r = std::max(r, std::abs(d(z) * d(z) - v) / std::max(1.0, std::abs(v)));
  }
  return r;
}

cplx nu_energy(const NUProblem &p, Branch b, int n) {
  if (n < 0) throw PreconditionError("level index must be >= 0");
  const NUBranch br = nu_branch(p, b);
  if (std::abs(br.lambda.slope) < 1e-300)
    throw SingularQuantization("lambda does not depend on the energy on branch " + to_string(b));
  const double nn = n;
  const cplx target = -nn * br.tau_prime - nn * (nn - 1.0);
  return p.mu * p.mu * (target - br.lambda.offset) / br.lambda.slope;
}

cplx nu_energy_closed_form(const NUProblem &p, Branch b, int n) {
  if (n < 0) throw PreconditionError("level index must be >= 0");
  p.validate();
  const cplx r = inner_root(p);
  const cplx s = std::sqrt(1.0 - 4.0 * p.a1 + (b == Branch::k1 ? -r : r));
  const cplx m = double(n) + 0.5 - s / (2.0 * std::sqrt(2.0));
  return -p.mu * p.mu * m * m;
}

std::pair<cplx, cplx> dirac_energy(cplx e, double v_f, bool imaginary_vf) {
  if (!(v_f > 0.0)) throw PreconditionError("Fermi velocity must be positive");
  const cplx v = imaginary_vf ? I * v_f : cplx(v_f);
  const cplx r = v * std::sqrt(e);
  return {r, -r};
}

cplx WeightFunction::operator()(cplx z) const { return std::pow(1.0 + z * z, p) * std::exp(q * std::atan(z)); }

WeightFunction nu_weight(const NUProblem &p, Branch b) {
  const NUBranch br = nu_branch(p, b);
  // (sigma rho)' = (2(p+1) z + q) rho must equal tau = 2 pi + z.
  const cplx tau1 = 1.0 + 2.0 * br.pi.coeff(1), tau0 = 2.0 * br.pi.coeff(0);
  return {tau1 / 2.0 - 1.0, tau0};
}

double nu_weight_residual(const NUProblem &p, Branch b) {
  const NUBranch br = nu_branch(p, b);
  const WeightFunction w = nu_weight(p, b);
  const Poly tau = br.pi * 2.0 + Poly{0.0, 1.0};
  auto sr = [&](double z) { return (1.0 + z * z) * w(z); };
  double r = 0.0;
  for (double z : kSampleZ) {
    const double h = 1e-3;
    const cplx d = (sr(z - 2 * h) - 8.0 * sr(z - h) + 8.0 * sr(z + h) - sr(z + 2 * h)) / (12.0 * h);
    r = std::max(r, std::abs(d - tau(z) * w(z)) / std::abs(w(z)));
  }
  return r;
}

EigenfunctionSpec nu_eigenfunction(const NUProblem &p, Branch b, int n, int cap) {
  if (n < 0) throw PreconditionError("level index must be >= 0");
  if (n > cap) throw UnsupportedDegree("Rodrigues construction capped at degree " + std::to_string(cap));
  const NUBranch br = nu_branch(p, b);
  const WeightFunction w = nu_weight(p, b);
  // d^m (sigma^n rho) = P_m sigma^{n-m} rho; y_n = P_n.
  Poly y{1.0};
  cplx s = double(n) + w.p;
  const Poly sigma = p.sigma();
  for (int m = 0; m < n; ++m) {
    y = y.derivative() * sigma + y * Poly{w.q, 2.0 * s};
    s -= 1.0;
  }
  return {n, b, -br.root_a, br.root_c, 1.0, y, p.mu, nu_energy(p, b, n)};
}

cplx EigenfunctionSpec::operator()(double x) const {
  const double mx = mu * x;
  const cplx f = (0.5 + alpha) * log_cosh(mx) - beta * std::atan(std::sinh(mx));
  return normalization * std::exp(f) * polynomial(std::sinh(mx));
}

cplx EigenfunctionSpec::second_derivative(double x) const {
  const double mx = mu * x;
  const double sh = std::sinh(mx), ch = std::cosh(mx), se = sech(mx), th = std::tanh(mx);
  const cplx g = 0.5 + alpha;
  const cplx f = g * log_cosh(mx) - beta * std::atan(sh);
  const cplx f1 = g * mu * th - beta * mu * se;
  const cplx f2 = g * mu * mu * se * se + beta * mu * mu * se * th;
  const Poly d1 = polynomial.derivative(), d2 = d1.derivative();
  const cplx y = polynomial(sh);
  const cplx y1 = mu * ch * d1(sh);
  const cplx y2 = mu * mu * (sh * d1(sh) + ch * ch * d2(sh));
  return normalization * std::exp(f) * ((f2 + f1 * f1) * y + 2.0 * f1 * y1 + y2);
}

double eigenfunction_residual(const NUProblem &p, const EigenfunctionSpec &f, const RVector &xs) {
  double num = 0.0, den = 0.0;
  for (double x : xs) {
    const cplx c = f(x);
    num += std::norm(-f.second_derivative(x) + (p.potential(x) - f.energy) * c);
    den += std::norm(c);
  }
  if (den == 0.0) throw PreconditionError("eigenfunction vanishes on the sample set");
  return std::sqrt(num / den);
}

int normalizable_levels(const NUProblem &p, Branch b) {
  const NUBranch br = nu_branch(p, b);
  const double r = 0.5 - br.root_a.real();
  int count = 0;
  while (r + count < -1e-12) ++count;
  return count;
}

int marginal_level(const NUProblem &p, Branch b, double tol) {
  const NUBranch br = nu_branch(p, b);
  const double r = 0.5 - br.root_a.real();
  const double n = -r;
  const double nr = std::round(n);
  if (nr >= 0.0 && std::abs(n - nr) <= tol) return int(nr);
  return -1;
}

cplx jacobi(int n, cplx a, cplx b, cplx x) {
  auto binom = [](cplx w, int k) {
    cplx r = 1.0;
    for (int j = 1; j <= k; ++j) r *= (w - double(k) + double(j)) / double(j);
    return r;
  };
  cplx s = 0.0;
  for (int k = 0; k <= n; ++k)
    s += binom(double(n) + a, n - k) * binom(double(n) + b, k) * std::pow((x - 1.0) / 2.0, k) *
         std::pow((x + 1.0) / 2.0, n - k);
  return s;
}

JacobiComparison jacobi_diagnostic(const NUProblem &p, Branch b, int n) {
  const EigenfunctionSpec f = nu_eigenfunction(p, b, n);
  const cplx ja = f.alpha - I * f.beta, jb = f.alpha + I * f.beta;
  cplx num = 0.0;
  double den = 0.0, ymax = 0.0;
  CVector ys, js;
  for (double z : kSampleZ) {
    ys.push_back(f.polynomial(z));
    js.push_back(jacobi(n, ja, jb, I * z));
    num += std::conj(js.back()) * ys.back();
    den += std::norm(js.back());
    ymax = std::max(ymax, std::abs(ys.back()));
  }
  const cplx c = den > 0.0 ? num / den : cplx(0.0);
  double r = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) r = std::max(r, std::abs(ys[i] - c * js[i]));
  return {ja, jb, c, ymax > 0.0 ? r / ymax : r};
}

std::pair<cplx, cplx> scarf_couplings_from_intertwiner(cplx b1, cplx s, double a, double mu) {
  if (!(mu > 0.0)) throw InvalidModel("mu must be positive");
  const double v2 = a * mu;
  return {-(v2 * v2 / (mu * mu) + 2.0 * b1 * mu), I * (v2 + 2.0 * s * mu)};
}

} // namespace ptweyl
