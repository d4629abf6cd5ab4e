#pragma once

#include <string>
#include <vector>

#include "ptweyl/grid.hpp"
#include "ptweyl/types.hpp"

namespace ptweyl {

enum class AnsatzKind { real, complex };
std::string to_string(AnsatzKind k);
AnsatzKind ansatz_kind_from_string(const std::string &s);

// real:    v = beta + alpha sinh(mu x),   A_y = A0 tanh + i A1 sech + A2 + i A3, A3 = i A2 + k
// complex: v = i beta + alpha sinh(mu x), A_y as above with A3 = i (A2 - k), and A_y -> i A_y
// In both cases the constants cancel k, leaving the coupling g = k + i A_y:
//   real:    g = i A0 tanh - A1 sech
//   complex: g = -A0 tanh - i A1 sech
struct PdfvAnsatz {
  AnsatzKind kind = AnsatzKind::real;
  double alpha = 1.0;
  double beta = 0.0;
  double mu = 1.0;
  cplx a0 = 0.0;
  cplx a1c = 0.0;
  cplx a2c = 0.0;
  cplx a3 = 0.0;
  double k = 0.0;

  // Fills a3 from a2 and k.
  static PdfvAnsatz make(AnsatzKind kind, double alpha, double beta, double mu, cplx a0, cplx a1, cplx a2 = 0.0,
                         double k = 0.0);
  void validate() const;

  cplx v(double x) const;
  cplx dv(double x) const;
  cplx d2v(double x) const;
  cplx a_y(double x) const;   // A_y as written in the ansatz (before A_y -> i A_y)
  cplx coupling(double x) const;   // k + i A_y after the prescription
  cplx dcoupling(double x) const;
};

enum class ConstraintStatus { solvable_verified, experimental };
std::string to_string(ConstraintStatus s);

struct ConstraintSet {
  cplx a0;
  cplx a1;
  ConstraintStatus status;
};

// Two (A0, A1) pairs per kind; the first one gives the solvable form.
std::vector<ConstraintSet> constraint_sets(AnsatzKind kind, double alpha, double beta, double mu);

// Ansatz with constraint set `which` (0 or 1) applied.
PdfvAnsatz constrained_ansatz(AnsatzKind kind, double alpha, double beta, double mu, int which = 0, double k = 0.0);

// W(x) = v(x) (k + i A_y(x)).
cplx pdfv_superpotential(const PdfvAnsatz &ans, double x);

// rho(v) = -v v''/2 - v'^2/4.
cplx pseudo_potential(const PdfvAnsatz &ans, double x);

// s = +1 for which = 1, -1 for which = 2.
int sign_of(int which);

// Effective potential of the gauge-transformed operator,
//   W^2 + s (v v' g + v^2 g') + rho,  g = k + i A_y.
cplx eff_potential_definitional(const PdfvAnsatz &ans, int which, double x);

// The long expansion of the which = 2 potential, term by term as commonly
// quoted. Does not cross-check.
cplx eff_potential_quoted_full(const PdfvAnsatz &ans, double x);

// Quoted expansion, checked against the definitional route; throws
// TranscriptionMismatch if they differ by more than 1e-8.
cplx eff_potential_full(const PdfvAnsatz &ans, int which, double x);

// Closed forms valid under the first constraint set.
cplx eff_potential_simplified(const PdfvAnsatz &ans, int which, double x);

// Velocity and coupling of a position-dependent velocity operator.
struct PdfvSystem {
  ComplexFn v, dv, d2v;
  ComplexFn g, dg;

  static PdfvSystem from_ansatz(const PdfvAnsatz &ans);
  cplx effective_potential(int s, double x) const;
};

// Points where v crosses zero between grid nodes (linear interpolation).
RVector velocity_zero_crossings(const PdfvSystem &sys, const Grid &grid);

// h_j phi = -v^2 phi'' - 2 v v' phi' + Veff_j phi, O(h^4) stencils.
CVector pdfv_hamiltonian_apply(const PdfvSystem &sys, int which, const Grid &grid, const CVector &phi);
CVector pdfv_hamiltonian_apply(const PdfvAnsatz &ans, int which, const Grid &grid, const CVector &phi);

// Original operator -v^2 psi'' - v v' psi' + (W^2 + s v W') psi.
CVector pdfv_original_apply(const PdfvSystem &sys, int which, const Grid &grid, const CVector &psi);

// max |H_j (sqrt(v) phi) - sqrt(v) h_j phi| over interior nodes, relative to
// max |sqrt(v) phi|. Throws SingularVelocity if v vanishes on the grid.
double gauge_route_residual(const PdfvSystem &sys, int which, const Grid &grid, const CVector &phi);

} // namespace ptweyl
