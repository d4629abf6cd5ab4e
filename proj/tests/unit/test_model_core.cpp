#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ptweyl/errors.hpp"
#include "ptweyl/grid.hpp"
#include "ptweyl/model_core.hpp"
#include "ptweyl/nu_solver.hpp"
#include "ptweyl/profiles.hpp"

using namespace ptweyl;

namespace {
bool near(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }
}

TEST_CASE("superpotential evaluation") {
  CHECK(near(superpotential_eval({2.0, zero_profile()}, 0.7), 2.0));
  CHECK(near(superpotential_eval({0.0, scarf2_profile(1.0, 1.0)}, 0.0), I));
  // sech(1) by its series 2 / (e + 1/e)
  double e = 0, term = 1;
  for (int k = 0; k < 30; ++k) e += term, term /= (k + 1);
  const double sech1 = 2.0 / (e + 1.0 / e);
  CHECK(sech1 == Catch::Approx(0.648054).margin(1e-6));
  CHECK(near(superpotential_eval({1.0, scarf2_profile(1.0, 1.0)}, 1.0), 1.0 + I * sech1));
}

TEST_CASE("partner potentials") {
  const auto [c1, c2] = partner_potentials({3.0, zero_profile()}, 0.4);
  CHECK(near(c1, 9.0));
  CHECK(near(c2, 9.0));

  const ScarfModel m{1.0, 1.0};
  const auto [v1, v2] = scarf2_potentials(m, 0.0);
  CHECK(near(v1, -1.0));
  CHECK(near(v2, -1.0));

  const double s = sech(1.0), t = std::tanh(1.0);
  const auto p1 = scarf2_potentials(m, 1.0);
  CHECK(near(p1.first, -s * s - I * s * t));
  CHECK(near(p1.second, -s * s + I * s * t));
  CHECK(near(p1.first, std::conj(p1.second)));

  const auto free = scarf2_potentials(ScarfModel{0.0, 1.0}, 2.3);
  CHECK(near(free.first, 0.0));
  CHECK(near(free.second, 0.0));
}

TEST_CASE("W' agrees with an O(h^4) difference of W") {
  const auto spec = ScarfModel{1.0, 1.0}.superpotential();
  const double h = 1e-3, x = 1.0;
  auto w = [&](double y) { return superpotential_eval(spec, y); };
  const cplx fd = (-w(x + 2 * h) + 8.0 * w(x + h) - 8.0 * w(x - h) + w(x - 2 * h)) / (12 * h);
  CHECK(std::abs(fd - superpotential_derivative(spec, x)) < 1e-10);
}

TEST_CASE("factorization holds for every analytic profile") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-6, 6);
  for (const auto &prof : {scarf2_profile(0.7 + 0.2 * I, 1.3), tanh_profile(1.1, 0.5), constant_profile(2.0)}) {
    const SuperpotentialSpec spec{0.4, prof};
    for (int i = 0; i < 200; ++i) {
      const double x = u(rng);
      const cplx w = superpotential_eval(spec, x), dw = superpotential_derivative(spec, x);
      const auto [v1, v2] = partner_potentials(spec, x);
      CHECK(std::abs(v1 - (w * w + dw)) <= 1e-12);
      CHECK(std::abs(v2 - (w * w - dw)) <= 1e-12);
    }
  }
}

TEST_CASE("tabulated profiles have no derivative") {
  const auto prof = load_table_profile(std::string(PTWEYL_TEST_DATA) + "/bump.csv");
  CHECK_FALSE(prof.has_derivative());
  CHECK(near(prof.value(1.0), cplx(0.55, 0.25)));
  CHECK_THROWS_AS(partner_potentials({0.0, prof}, 0.0), UnsupportedProfile);
  CHECK_THROWS_AS(profile_by_name("nope", {}), UnsupportedProfile);
}

TEST_CASE("invalid models") {
  CHECK_THROWS_AS(ScarfModel({1.0, 0.0}).validate(), InvalidModel);
  CHECK_THROWS_AS(ScarfModel({1.0, -2.0}).validate(), InvalidModel);
  CHECK_NOTHROW(ScarfModel({0.0, 1.0}).validate());
}

TEST_CASE("magnetic field") {
  const ScarfModel m{1.0, 1.0};
  CHECK(magnetic_field(m, 0.0) == Catch::Approx(0.0).margin(1e-15));
  CHECK(std::abs(magnetic_field(m, 40.0)) < 1e-15);
  CHECK(magnetic_field(m, 1.0) == Catch::Approx(-sech(1.0) * std::tanh(1.0)));
  CHECK(magnetic_field(m, 1.0) == Catch::Approx(-0.4935543).margin(1e-6));
  // B = dA_y/dx
  const double h = 1e-3;
  auto a = [](double x) { return sech(x); };
  const double fd = (-a(1 + 2 * h) + 8 * a(1 + h) - 8 * a(1 - h) + a(1 - 2 * h)) / (12 * h);
  CHECK(magnetic_field(m, 1.0) == Catch::Approx(fd).epsilon(1e-10));
}

TEST_CASE("PT residual") {
  const Grid g(12.0, 2001);
  const ScarfModel m{1.0, 1.0};
  CHECK(pt_symmetry_residual([&](double x) { return scarf2_potentials(m, x).first; }, g.points()) <= 1e-12);
  // i x is PT-invariant; a real odd potential is maximally PT-violating
  CHECK(pt_symmetry_residual([](double x) { return I * x; }, g.points()) == 0.0);
  CHECK(pt_symmetry_residual([](double x) { return cplx(x); }, g.points()) == Catch::Approx(24.0));
  const auto p = NUProblem::from_couplings(-3.0, 3.0 * I, 1.0);
  CHECK(pt_symmetry_residual([&](double x) { return p.potential(x); }, g.points()) <= 1e-12);
  CHECK_THROWS_AS(pt_symmetry_residual([](double) { return cplx(0); }, {0.0, 1.0, 3.0}), PreconditionError);
}

TEST_CASE("charge-conjugation residual") {
  const Grid g(8.0, 401);
  const auto xs = g.points();
  CHECK(c_anti_symmetry_residual({[](double x) { return I * sech(x); }}, xs) <= 1e-10);
  CHECK(c_anti_symmetry_residual({[](double) { return cplx(0); }}, xs) == 0.0);
  CHECK(c_anti_symmetry_residual({[](double x) { return cplx(std::tanh(x)); }}, xs) > 0.5);
}

TEST_CASE("spinor reconstruction") {
  SECTION("free plane wave") {
    const Grid g(5.0, 2001);
    const double kappa = 0.8;
    CVector psi2;
    for (double x : g.points()) psi2.push_back(std::exp(I * kappa * x));
    const SuperpotentialSpec spec{0.0, zero_profile()};
    const auto s = spinor_reconstruct(psi2, g.points(), kappa, spec);
    for (int i = 0; i < g.n(); i += 100) CHECK(std::abs(s.psi1[i] - I * psi2[i]) < 1e-9);
    CHECK(spinor_residual(s, spec) < 1e-6);
  }
  SECTION("Scarf ground state at eps = i/2") {
    // psi2 solves the second partner, whose sech tanh coupling is +i.
    const Grid g(15.0, 4001);
    const auto p = NUProblem::from_couplings(-1.0, I, 1.0);
    const auto chi = nu_eigenfunction(p, Branch::k2, 0);
    CHECK(std::abs(chi.energy + 0.25) < 1e-12);
    CVector psi2;
    for (double x : g.points()) psi2.push_back(chi(x));
    const auto spec = ScarfModel{1.0, 1.0}.superpotential();
    const auto s = spinor_reconstruct(psi2, g.points(), 0.5 * I, spec);
    CHECK(spinor_residual(s, spec) <= 1e-6);
  }
  CHECK_THROWS_AS(spinor_reconstruct(CVector(11, 1.0), Grid(1.0, 11).points(), 0.0, {}), ZeroModeError);
}
