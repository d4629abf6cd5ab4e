#include <catch_amalgamated.hpp>

#include <cmath>

#include "ptweyl/errors.hpp"
#include "ptweyl/intertwine.hpp"
#include "ptweyl/model_core.hpp"

using namespace ptweyl;

namespace {
bool near(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }
Potential v2_of(double a, double mu) {
  const ScarfModel m{a, mu};
  return [m](double x) { return scarf2_potentials(m, x).second; };
}
}

TEST_CASE("constraint solutions") {
  const auto sols = solve_bs_constraints(1.0, 1.0);
  REQUIRE(sols.size() == 4);
  const std::vector<std::pair<double, double>> expected = {{0, -1}, {1, 1}, {-0.5, -0.5}, {1.5, 0.5}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(near(sols[i].b1, expected[i].first));
    CHECK(near(sols[i].s, expected[i].second));
    CHECK(near(sols[i].b2, I * sols[i].s));
    CHECK(std::abs(sols[i].residual_product) <= 1e-12);
    CHECK(std::abs(sols[i].residual_sum) <= 1e-12);
  }
}

TEST_CASE("constraint residuals hold across parameters") {
  for (double a : {0.0, 0.3, 1.0, 2.5})
    for (double mu : {0.5, 1.0, 3.0})
      for (const auto &c : solve_bs_constraints(a, mu)) {
        CHECK(std::abs(c.residual_product) <= 1e-12 * std::max(1.0, a * mu));
        CHECK(std::abs(c.residual_sum) <= 1e-12 * std::max(1.0, a * a + mu * mu));
      }
  bool zero = false, one = false;
  for (const auto &c : solve_bs_constraints(0.0, 1.0)) {
    zero = zero || (near(c.b1, 0.0) && near(c.s, 0.0));
    one = one || (near(c.b1, 1.0) && near(c.s, 0.0));
  }
  CHECK(zero);
  CHECK(one);
}

TEST_CASE("U family potentials") {
  const double s = sech(1.0), t = std::tanh(1.0);
  CHECK(near(u_family(make_coeffs(0.0, -1.0, 1.0, 1.0), 1.0, 1.0, 1.0), -s * s - I * s * t));
  CHECK(near(u_family(make_coeffs(1.0, 1.0, 1.0, 1.0), 1.0, 1.0, 1.0), -3 * s * s + 3.0 * I * s * t));
  CHECK(std::abs(u_family(make_coeffs(1.0, 1.0, 1.0, 1.0), 1.0, 1.0, 40.0)) < 1e-15);

  const auto members = u_family_members(1.0, 1.0);
  REQUIRE(members.size() == 4);
  CHECK(members[0].label == "equals_v1");
  CHECK(near(members[0].a1_coeff, -1.0));
  CHECK(near(members[0].a2_coeff, -I));
  CHECK(near(members[1].a1_coeff, -3.0));
  CHECK(near(members[1].a2_coeff, 3.0 * I));
  for (const auto &m : members) {
    const auto [q1, q2] = quoted_u_coefficients(m.label, 1.0, 1.0);
    CHECK(near(q1, m.a1_coeff));
    CHECK(near(q2, m.a2_coeff));
  }
  // the first member is V1 itself
  const ScarfModel model{1.0, 1.0};
  const auto u = u_family_potential(make_coeffs(0.0, -1.0, 1.0, 1.0), 1.0, 1.0);
  for (double x : {-2.0, 0.1, 3.0}) CHECK(near(u(x), scarf2_potentials(model, x).first));
}

TEST_CASE("U superpotential") {
  const auto w = superpotential_for_u(1.0, 1.0);
  CHECK(near(superpotential_eval(w, 0.0), -I));
  CHECK(near(partner_potentials(w, 0.0).second, -1.0));
  const auto u = u_family_potential(make_coeffs(0.0, -1.0, 1.0, 1.0), 1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = -10.0 + 20.0 * i / 999;
    CHECK(std::abs(partner_potentials(w, x).second - u(x)) <= 1e-12);
  }
}

TEST_CASE("eta operators act as first-order differential operators") {
  const Grid g(10.0, 2001);
  SECTION("zero coupling on constants") {
    const auto op = EtaOperator::first_order({[](double) { return cplx(0); }, [](double) { return cplx(0); }});
    for (auto v : eta_apply(op, g, CVector(g.n(), 1.0))) CHECK(std::abs(v) < 1e-12);
  }
  SECTION("eta2 on 1/cosh") {
    CVector psi;
    for (double x : g.points()) psi.push_back(sech(x));
    const auto out = eta_apply(EtaOperator::eta2(1.0, 1.0), g, psi);
    double err = 0;
    for (int i = 0; i < g.n(); ++i) {
      const double x = g.x(i);
      err = std::max(err, std::abs(out[i] - (-std::tanh(x) * sech(x) + I * sech(x) * sech(x))));
    }
    CHECK(err <= 1e-8);
  }
  SECTION("composite matches its second-order expansion at O(h^4)") {
    const auto inner = EtaOperator::eta1(make_coeffs(1.0, 1.0, 1.0, 1.0), 1.0);
    const auto outer = EtaOperator::eta2(1.0, 1.0);
    const auto comp = EtaOperator::composite(outer, inner);
    auto err = [&](int n) {
      Grid gg(6.0, n);
      CVector psi;
      for (double x : gg.points()) psi.push_back(std::exp(-x * x));
      const auto out = eta_apply(comp, gg, psi);
      double e = 0;
      for (int i = 0; i < n; ++i) {
        const double x = gg.x(i);
        const cplx f = std::exp(-x * x), df = -2 * x * f, d2f = (4 * x * x - 2) * f;
        const cplx g1 = inner.first.g(x), dg1 = inner.first.dg(x), g2 = outer.first.g(x);
        // (d + g2)(d + g1) f = f'' + (g1 + g2) f' + (g1' + g2 g1) f
        e = std::max(e, std::abs(out[i] - (d2f + (g1 + g2) * df + (dg1 + g2 * g1) * f)));
      }
      return e;
    };
    const double e1 = err(301), e2 = err(601);
    CHECK(e1 / e2 > 8.0);
    CHECK(e2 < 1e-5);
  }
}

TEST_CASE("intertwining residuals") {
  const std::vector<Grid> grids = {Grid(10.0, 401), Grid(10.0, 801), Grid(10.0, 1601)};
  SECTION("Scarf pair converges at h^2") {
    const auto c = make_coeffs(0.0, -1.0, 1.0, 1.0);
    const auto res = convergence_study(
        "eta1",
        [&](const Grid &g) {
          return intertwining_residual(u_family_potential(c, 1.0, 1.0), v2_of(1.0, 1.0), EtaOperator::eta1(c, 1.0), g);
        },
        grids);
    for (double q : res.ratios) CHECK((q >= 3.5 && q <= 4.5));
  }
  SECTION("mismatched potentials stay bounded below") {
    const auto d = EtaOperator::first_order({[](double) { return cplx(0); }, [](double) { return cplx(0); }});
    const Potential zero = [](double) { return cplx(0); };
    const Potential well = [](double x) { return cplx(sech(x) * sech(x)); };
    const double r1 = intertwining_residual(zero, well, d, grids[0]);
    const double r3 = intertwining_residual(zero, well, d, grids[2]);
    CHECK(r3 > 0.1);
    CHECK(r3 > 0.5 * r1);
  }
  SECTION("identity commutes") {
    const auto v2 = v2_of(1.0, 1.0);
    CHECK(intertwining_residual(v2, v2, EtaOperator::identity(), grids[0]) <= 1e-10);
  }
}

TEST_CASE("pseudo-Hermiticity residuals") {
  const std::vector<Grid> grids = {Grid(10.0, 401), Grid(10.0, 801), Grid(10.0, 1601)};
  const auto res = convergence_study(
      "eta2", [&](const Grid &g) { return pseudo_hermiticity_residual(v2_of(1.0, 1.0), EtaOperator::eta2(1.0, 1.0), g); },
      grids);
  for (double q : res.ratios) CHECK((q >= 3.5 && q <= 4.5));

  const Potential well = [](double x) { return cplx(-2.0 * sech(x) * sech(x)); };
  CHECK(pseudo_hermiticity_residual(well, EtaOperator::identity(), grids[0]) <= 1e-10);

  // unbounded gain and loss: no convergence
  const Potential gain = [](double x) { return I * x; };
  const double r1 = pseudo_hermiticity_residual(gain, EtaOperator::eta2(1.0, 1.0), grids[0]);
  const double r3 = pseudo_hermiticity_residual(gain, EtaOperator::eta2(1.0, 1.0), grids[2]);
  CHECK(r3 > 0.5 * r1);
}

TEST_CASE("spectral shift between U and its partner") {
  const auto c = make_coeffs(0.0, -1.0, 1.0, 1.0);
  const Grid g(15.0, 3001);
  const auto rep = spectral_shift_check(u_family_potential(c, 1.0, 1.0), v2_of(1.0, 1.0), 5e-3, g,
                                        EtaOperator::eta1(c, 1.0));
  CHECK(rep.shift_ok);
  CHECK(rep.pairs.size() >= 1);
  CHECK(rep.max_collinearity <= 1e-2);

  const auto same = spectral_shift_check(v2_of(1.0, 1.0), v2_of(1.0, 1.0), 5e-3, g);
  CHECK(same.shift_ok);
  CHECK(same.unmatched_h.empty());
  CHECK(same.unmatched_h2.empty());
  CHECK(same.extra_level_side == "none");
}
