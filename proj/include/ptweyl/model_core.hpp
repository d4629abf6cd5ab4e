#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ptweyl/band_matrix.hpp"
#include "ptweyl/profiles.hpp"
#include "ptweyl/types.hpp"

namespace ptweyl {

// W(x) = k + i a_y(x).
struct SuperpotentialSpec {
  double k = 0.0;
  FieldProfile a_y;
};

// Scarf II scenario: A_y = a sech(mu x). With k_absorbed the gauge
// constant cancels k and W = i a sech(mu x); otherwise W keeps +k.
struct ScarfModel {
  double a = 1.0;
  double mu = 1.0;
  double k = 0.0;
  bool k_absorbed = true;

  void validate() const;
  SuperpotentialSpec superpotential() const;
};

enum class PotentialLabel { V1, V2, U, Veff };
std::string to_string(PotentialLabel l);

struct ComplexPotentialSample {
  double x;
  cplx v;
  PotentialLabel label;
};

std::vector<ComplexPotentialSample> sample_potential(const Potential &p, const RVector &xs, PotentialLabel label);

cplx superpotential_eval(const SuperpotentialSpec &spec, double x);
cplx superpotential_derivative(const SuperpotentialSpec &spec, double x);

// (W^2 + W', W^2 - W') from the analytic derivative.
std::pair<cplx, cplx> partner_potentials(const SuperpotentialSpec &spec, double x);

std::pair<cplx, cplx> scarf2_potentials(const ScarfModel &m, double x);
double magnetic_field(const ScarfModel &m, double x);

// max |V(x) - conj(V(-x))| over a grid symmetric about 0.
double pt_symmetry_residual(const Potential &v, const RVector &grid);

using Mat2 = std::array<std::array<cplx, 2>, 2>;

// [[0, d/dx + W], [-d/dx + W, 0]].
struct FirstOrderDiracOp {
  ComplexFn w;

  static Mat2 sigma1();
  static Mat2 sigma2();
  static Mat2 sigma3();
  static Mat2 gamma0();  // sigma3
  static Mat2 gamma1();  // i sigma1
  static Mat2 gamma5();  // i gamma0 gamma1

  // Block matrix on the sample points (2n x 2n): rows 0..n-1 are the first
  // component. Second-order central differences, zero outside the samples.
  BandMatrix discretize(const RVector &grid, bool negate_field = false) const;
};

// none: compare C H C^-1 with -H. negate_field: compare with -H(e -> -e),
// i.e. W -> -W in the second operator.
enum class ChargeFlip { none, negate_field };

// Induced infinity-norm of C H C^-1 + H(flip) on the grid, C = gamma5 R.
double c_anti_symmetry_residual(const FirstOrderDiracOp &op, const RVector &grid,
                                ChargeFlip flip = ChargeFlip::none);

struct SpinorSolution {
  cplx eps;
  RVector x;
  CVector psi1;
  CVector psi2;
  // The 2D fields are phi1 = e^{iky} psi1, phi2 = i e^{iky} psi2.
  std::string note = "phi1 = exp(i k y) psi1, phi2 = i exp(i k y) psi2";
};

// psi1 = eps^-1 (d/dx + W) psi2 with O(h^4) differentiation.
SpinorSolution spinor_reconstruct(const CVector &psi2, const RVector &grid, cplx eps,
                                  const SuperpotentialSpec &spec);

// Max residual of both first-order equations, relative to max |psi|.
double spinor_residual(const SpinorSolution &s, const SuperpotentialSpec &spec);

} // namespace ptweyl
