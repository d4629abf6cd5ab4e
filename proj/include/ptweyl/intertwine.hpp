#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptweyl/grid.hpp"
#include "ptweyl/model_core.hpp"
#include "ptweyl/nu_solver.hpp"
#include "ptweyl/oracle.hpp"
#include "ptweyl/types.hpp"

namespace ptweyl {

// eta_1 = d/dx + b1 tanh(mu x) + i s sech(mu x); b2 = i s (J = H = 0).
struct IntertwinerCoeffs {
  cplx b1;
  cplx b2;
  cplx s;
  cplx residual_product;  // 2 b1 s - V2 - s mu
  cplx residual_sum;      // b1^2 + s^2 - b1 mu - V1
  bool degenerate = false;
};

// All (b1, s) with b2 = i s solving the constraint pair, V1 = a^2, V2 = a mu.
// Order: the u^2 = mu^2 pair (b1 = 0, mu) first, then the u^2 = 4 a^2 pair.
std::vector<IntertwinerCoeffs> solve_bs_constraints(double a, double mu);

IntertwinerCoeffs make_coeffs(cplx b1, cplx s, double a, double mu);

// U(x) = i(2 s mu + V2) sech tanh - (V2^2/mu^2 + 2 b1 mu) sech^2.
cplx u_family(const IntertwinerCoeffs &c, double a, double mu, double x);
Potential u_family_potential(const IntertwinerCoeffs &c, double a, double mu);

struct UFamilyMember {
  cplx b1;
  cplx s;
  cplx a1_coeff;  // sech^2 coefficient
  cplx a2_coeff;  // sech tanh coefficient
  // equals_v1 (0, -a), deepened (mu, a), half_minus ((mu - 2a)/2, -mu/2),
  // half_plus ((mu + 2a)/2, mu/2); empty if none applies.
  std::string label;
};

std::vector<UFamilyMember> u_family_members(double a, double mu);

// The closed forms of the four members exactly as usually quoted, with
// b1 = (1 -/+ 2a)/2 for the half members; coincide with the solver at mu = 1.
std::pair<cplx, cplx> quoted_u_coefficients(const std::string &label, double a, double mu);

enum class EtaKind { eta1, eta2, composite, identity };

// First-order factor d/dx + g(x) with analytic g'.
struct FirstOrderFactor {
  ComplexFn g;
  ComplexFn dg;
};

struct EtaOperator {
  EtaKind kind = EtaKind::identity;
  FirstOrderFactor first;   // eta1 / eta2 / inner factor of composite
  FirstOrderFactor second;  // outer factor of composite

  static EtaOperator eta1(const IntertwinerCoeffs &c, double mu);
  static EtaOperator eta2(double a, double mu);
  // Applies `inner` first, then `outer`: eta = outer o inner.
  static EtaOperator composite(const EtaOperator &outer, const EtaOperator &inner);
  static EtaOperator first_order(FirstOrderFactor f);
  static EtaOperator identity();
};

// (d/dx + g) psi on uniform samples with O(h^4) differences.
CVector eta_apply(const EtaOperator &op, const Grid &grid, const CVector &psi);

// Full-grid second-order band matrix of the operator (edge rows truncated).
BandMatrix eta_matrix(const EtaOperator &op, const Grid &grid, int order = 2);
BandMatrix hamiltonian_matrix(const Potential &u, const Grid &grid, int order = 2);

// Gaussians exp(-(x - c)^2 / (2 w^2)), w in {0.5, 1, 2}/mu, c in {0, 0.5/mu}.
std::vector<CVector> test_bank(const Grid &grid, double mu);

// max over the test bank of ||(eta H_left - H_right eta) psi|| / ||psi||.
double intertwining_residual(const Potential &u_left, const Potential &u_right, const EtaOperator &op,
                             const Grid &grid, double mu = 1.0);

// Same with H_right = H_left^dagger (conjugate transpose of the matrix).
double pseudo_hermiticity_residual(const Potential &u, const EtaOperator &op, const Grid &grid,
                                   double mu = 1.0);

// W(x) = -i a sech(mu x).
SuperpotentialSpec superpotential_for_u(double a, double mu);

struct ShiftPair {
  cplx e_h;
  cplx e_h2;
  double abs_err;
  double collinearity;  // sin of the angle between eta psi_h and psi_h2; -1 if not mapped
};

struct SpectralShiftReport {
  std::vector<ShiftPair> pairs;
  std::vector<cplx> unmatched_h;
  std::vector<cplx> unmatched_h2;
  std::string extra_level_side;  // "none", "H", "H2" or "both"
  bool shift_ok;                 // all pairs within tol and at most one unmatched level
  double max_collinearity;
};

// Compares bound spectra of H = -d^2 + u_h and H2 = -d^2 + u_h2. If eta is
// given, mapped eigenvectors eta psi_h are compared with psi_h2.
SpectralShiftReport spectral_shift_check(const Potential &u_h, const Potential &u_h2, double tol,
                                         const Grid &grid, const std::optional<EtaOperator> &eta = std::nullopt,
                                         const OracleOptions &opts = {});

} // namespace ptweyl
