#pragma once

#include <string>
#include <utility>

#include "ptweyl/polynomial.hpp"
#include "ptweyl/types.hpp"

namespace ptweyl {

enum class Branch { k1, k2 };
std::string to_string(Branch b);
Branch branch_from_string(const std::string &s);

// f(e) = slope * e + offset, e the reduced energy E / mu^2.
struct Affine {
  cplx slope = 0.0;
  cplx offset = 0.0;
  cplx operator()(cplx e) const { return slope * e + offset; }
};

// U(x) = A1 sech^2(mu x) + A2 sech(mu x) tanh(mu x), reduced couplings
// a1 = A1 / mu^2, a2 = A2 / mu^2, with z = sinh(mu x).
struct NUProblem {
  cplx a1 = 0.0;
  cplx a2 = 0.0;
  double mu = 1.0;

  static NUProblem from_couplings(cplx A1, cplx A2, double mu);
  void validate() const;
  cplx potential(double x) const;

  Poly sigma() const { return Poly{1.0, 0.0, 1.0}; }
  Poly tau_tilde() const { return Poly{0.0, 1.0}; }
  Poly sigma_tilde(cplx e_bar) const;
};

struct NUReduction {
  Poly sigma;
  Poly tau_tilde;
  Poly sigma_tilde;
};

NUReduction nu_reduce(const NUProblem &p, cplx e_bar);

// k1 takes the minus sign of the inner root, k2 the plus sign.
std::pair<Affine, Affine> nu_k_roots(const NUProblem &p);

struct NUBranch {
  Branch tag;
  Affine k;
  Poly pi;           // p1 z + p0
  Affine lambda;     // k + pi'
  cplx tau_prime;    // 1 + 2 p1
  bool accepted;     // Re tau' < 0
  cplx root_a;       // p with pi = z/2 - (p z + q)
  cplx root_c;       // q
};

// Never throws on the sign of tau'; callers check accepted.
NUBranch nu_branch(const NUProblem &p, Branch b);

// pi(z) of an accepted branch; BranchRejected when Re tau' >= 0.
Poly nu_pi(const NUProblem &p, Branch b);

// Residual of (pi - (sigma' - tau~)/2)^2 = ((sigma' - tau~)/2)^2 - sigma~ + k sigma
// at a few sample z, for the given reduced energy.
double nu_pi_identity_residual(const NUProblem &p, Branch b, cplx e_bar);

// E_n from the affine quantization lambda(e) = -n tau' - n(n-1).
cplx nu_energy(const NUProblem &p, Branch b, int n);
// E_n from the closed square-root formula, independent of nu_energy.
cplx nu_energy_closed_form(const NUProblem &p, Branch b, int n);

// (+v_f sqrt(E), -v_f sqrt(E)), principal root; v_f -> i v_f when imaginary_vf.
std::pair<cplx, cplx> dirac_energy(cplx e, double v_f, bool imaginary_vf);

// rho(z) = (1 + z^2)^p exp(q arctan z).
struct WeightFunction {
  cplx p;
  cplx q;
  cplx operator()(cplx z) const;
};

WeightFunction nu_weight(const NUProblem &p, Branch b);
// max over sample z of |(sigma rho)' - tau rho| / |rho|.
double nu_weight_residual(const NUProblem &p, Branch b);

struct EigenfunctionSpec {
  int n;
  Branch branch;
  cplx alpha;
  cplx beta;
  double normalization = 1.0;
  Poly polynomial;   // y_n(z); the leading coefficient may vanish
  double mu;
  cplx energy;

  // chi(x) = cosh^{1/2+alpha} exp(-beta arctan sinh) y(sinh), times normalization.
  cplx operator()(double x) const;
  cplx second_derivative(double x) const;
};

inline constexpr int kDefaultDegreeCap = 12;

EigenfunctionSpec nu_eigenfunction(const NUProblem &p, Branch b, int n, int cap = kDefaultDegreeCap);

// ||-chi'' + U chi - E chi|| / ||chi|| on the sample points.
double eigenfunction_residual(const NUProblem &p, const EigenfunctionSpec &f, const RVector &xs);

// Levels with Re(1/2 + alpha) + n < 0.
int normalizable_levels(const NUProblem &p, Branch b);
// Level with Re(1/2 + alpha) + n == 0 (within tol), or -1.
int marginal_level(const NUProblem &p, Branch b, double tol = 1e-12);

// Jacobi polynomial P_n^{(a,b)}(x), explicit sum.
cplx jacobi(int n, cplx a, cplx b, cplx x);
struct JacobiComparison {
  cplx a;
  cplx b;
  cplx scale;
  double residual;  // relative, at seven sample points
};
// y_n(z) against c P_n^{(alpha - i beta, alpha + i beta)}(i z).
JacobiComparison jacobi_diagnostic(const NUProblem &p, Branch b, int n);

// Coupling of the U family in the NU form: A1 = -(a^2 + 2 b1 mu), A2 = i(a mu + 2 s mu).
std::pair<cplx, cplx> scarf_couplings_from_intertwiner(cplx b1, cplx s, double a, double mu);

} // namespace ptweyl
