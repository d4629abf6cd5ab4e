#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ptweyl/errors.hpp"
#include "ptweyl/grid.hpp"
#include "ptweyl/nu_solver.hpp"

using namespace ptweyl;

namespace {
bool near(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }
const NUProblem kScarf = NUProblem::from_couplings(-1.0, -I, 1.0);
const NUProblem kDeep = NUProblem::from_couplings(-3.0, 3.0 * I, 1.0);
const NUProblem kReal = NUProblem::from_couplings(-1.0, 0.0, 1.0);
const NUProblem kFree = NUProblem::from_couplings(0.0, 0.0, 1.0);
}

TEST_CASE("reduced sigma tilde") {
  const auto zero = nu_reduce(kFree, 0.0).sigma_tilde;
  CHECK(zero.degree() == -1);
  const auto s = nu_reduce(kScarf, -0.25).sigma_tilde;
  CHECK(near(s.coeff(0), 0.75));
  CHECK(near(s.coeff(1), I));
  CHECK(near(s.coeff(2), -0.25));
  const auto d = nu_reduce(kDeep, 0.0).sigma_tilde;
  CHECK(near(d.coeff(0), 3.0));
  CHECK(near(d.coeff(1), -3.0 * I));
  CHECK(d.degree() == 1);
}

TEST_CASE("k roots are affine in the energy") {
  auto [k1, k2] = nu_k_roots(kFree);
  CHECK(near(k1.slope, 1.0));
  CHECK(near(k1.offset, -0.25));
  CHECK(near(k2.offset, 0.0));
  // the branch offsets differ by (inner root) / 4
  std::tie(k1, k2) = nu_k_roots(kScarf);
  CHECK(near(k2.offset - k1.offset, 3.0 / 4.0));
  std::tie(k1, k2) = nu_k_roots(kDeep);
  CHECK(near(k2.offset - k1.offset, 5.0 / 4.0));
}

TEST_CASE("pi satisfies its defining identity") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 20; ++i) {
    const auto p = NUProblem::from_couplings({u(rng), u(rng)}, {u(rng), u(rng)}, 1.0);
    for (Branch b : {Branch::k1, Branch::k2})
      for (cplx e : {cplx(-0.3), cplx(0.2, 0.1)}) CHECK(nu_pi_identity_residual(p, b, e) <= 1e-10);
  }
}

TEST_CASE("branch acceptance") {
  CHECK_FALSE(nu_branch(kFree, Branch::k1).accepted);
  CHECK_THROWS_AS(nu_pi(kFree, Branch::k1), BranchRejected);
  CHECK(nu_branch(kDeep, Branch::k2).accepted);
  CHECK(nu_pi(kDeep, Branch::k2).degree() == 1);
}

TEST_CASE("closed-form energies") {
  CHECK(near(nu_energy(kScarf, Branch::k2, 0), -0.25));
  CHECK(near(nu_energy(kReal, Branch::k2, 0), -std::pow((std::sqrt(5.0) - 1) / 2, 2)));
  CHECK(nu_energy(kReal, Branch::k2, 0).real() == Catch::Approx(-0.381966).margin(1e-6));
  CHECK(near(nu_energy(kDeep, Branch::k2, 0), -1.0));
  // mu scales energies by mu^2
  const auto p2 = NUProblem::from_couplings(-4.0, -4.0 * I, 2.0);
  CHECK(near(nu_energy(p2, Branch::k2, 0), -1.0));
}

TEST_CASE("affine quantization equals the square-root formula") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 20; ++i) {
    const auto p = NUProblem::from_couplings({u(rng), u(rng)}, {u(rng), u(rng)}, 1.0);
    for (Branch b : {Branch::k1, Branch::k2})
      for (int n = 0; n <= 8; ++n) {
        const cplx e = nu_energy(p, b, n);
        CHECK(std::abs(e - nu_energy_closed_form(p, b, n)) <= 1e-12 * std::max(1.0, std::abs(e)));
      }
  }
}

TEST_CASE("dirac energies") {
  CHECK(dirac_energy(0.0, 1.0, false) == std::pair<cplx, cplx>{0.0, 0.0});
  const auto off = dirac_energy(-0.25, 1.0, false);
  CHECK(near(off.first, 0.5 * I));
  CHECK(near(off.second, -0.5 * I));
  const auto on = dirac_energy(-0.25, 1.0, true);
  CHECK(std::abs(on.first.imag()) <= 1e-12);
  CHECK(std::abs(std::abs(on.first.real()) - 0.5) <= 1e-12);
  CHECK(near(on.first, -on.second));
  CHECK(near(dirac_energy(-1.0, 2.0, false).first, 2.0 * I));
}

TEST_CASE("weight function") {
  const auto w = nu_weight(kScarf, Branch::k2);
  CHECK(std::abs(w.q.real()) < 1e-14);  // purely imaginary exponent
  for (Branch b : {Branch::k1, Branch::k2}) {
    CHECK(nu_weight_residual(kScarf, b) <= 1e-10);
    CHECK(nu_weight_residual(kDeep, b) <= 1e-10);
  }
  const WeightFunction pure{-1.0, 0.0};
  CHECK(near(pure(2.0), 0.2));
}

TEST_CASE("eigenfunctions") {
  for (Branch b : {Branch::k1, Branch::k2}) CHECK(near(nu_eigenfunction(kScarf, b, 0)(0.0), 1.0));

  const auto chi = nu_eigenfunction(kScarf, Branch::k2, 0);
  CHECK(near(chi.alpha, -1.0));
  CHECK(std::abs(std::abs(chi.beta) - 0.5) < 1e-12);
  CHECK(std::abs(chi.beta.real()) < 1e-12);
  for (double x : {-3.0, -0.5, 1.0, 4.0}) CHECK(std::abs(std::abs(chi(x)) - 1.0 / std::sqrt(std::cosh(x))) < 1e-12);

  const auto xs = Grid(10.0, 801).points();
  for (int n : {0, 1}) {
    CHECK(eigenfunction_residual(kScarf, nu_eigenfunction(kScarf, Branch::k2, n), xs) <= 1e-6);
    CHECK(eigenfunction_residual(kDeep, nu_eigenfunction(kDeep, Branch::k2, n), xs) <= 1e-6);
  }
  CHECK_THROWS_AS(nu_eigenfunction(kScarf, Branch::k2, 13), UnsupportedDegree);
}

TEST_CASE("normalizable level counts") {
  CHECK(normalizable_levels(kFree, Branch::k1) == 0);
  CHECK(normalizable_levels(kFree, Branch::k2) == 0);
  CHECK(normalizable_levels(kScarf, Branch::k2) == 1);
  CHECK(normalizable_levels(kScarf, Branch::k1) == 0);
  CHECK(marginal_level(kScarf, Branch::k1) == 0);
  CHECK(normalizable_levels(kDeep, Branch::k2) == 1);
  CHECK(marginal_level(kDeep, Branch::k2) == 1);
}

TEST_CASE("Rodrigues polynomials are Jacobi polynomials") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 5; ++i) {
    const auto p = NUProblem::from_couplings({u(rng) - 3, u(rng)}, {u(rng), u(rng)}, 1.0);
    for (int n = 0; n <= 4; ++n) CHECK(jacobi_diagnostic(p, Branch::k2, n).residual <= 1e-9);
  }
  CHECK(near(jacobi(1, 0.0, 0.0, 0.3), 0.3));
  CHECK(near(jacobi(2, 0.0, 0.0, 0.5), -0.125));
}

TEST_CASE("intertwiner couplings") {
  const auto [a1, a2] = scarf_couplings_from_intertwiner(0.0, -1.0, 1.0, 1.0);
  CHECK(near(a1, -1.0));
  CHECK(near(a2, -I));
  const auto [b1, b2] = scarf_couplings_from_intertwiner(1.0, 1.0, 1.0, 1.0);
  CHECK(near(b1, -3.0));
  CHECK(near(b2, 3.0 * I));
  const auto [c1, c2] = scarf_couplings_from_intertwiner(0.0, 0.0, 0.0, 1.0);
  CHECK(near(c1, 0.0));
  CHECK(near(c2, 0.0));
}

TEST_CASE("invalid problems") {
  CHECK_THROWS_AS(NUProblem::from_couplings(1.0, 0.0, 0.0), InvalidModel);
  CHECK_THROWS_AS(branch_from_string("k3"), std::exception);
}
