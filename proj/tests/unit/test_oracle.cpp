#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ptweyl/errors.hpp"
#include "ptweyl/nu_solver.hpp"
#include "ptweyl/oracle.hpp"
#include "ptweyl/stencil.hpp"

using namespace ptweyl;

namespace {
const Potential kZero = [](double) { return cplx(0); };
const Potential kWell = [](double x) { return cplx(-sech(x) * sech(x)); };
const Potential kScarf = [](double x) { return -sech(x) * sech(x) - I * sech(x) * std::tanh(x); };
}

TEST_CASE("discretized operator structure") {
  const Grid g(1.0, 5);
  const auto m = discretize_schrodinger(kZero, g, 2);
  const double h = g.h();
  REQUIRE(m.size() == 3);
  CHECK(m.m.get(1, 1) == cplx(2 / (h * h)));
  CHECK(m.m.get(1, 0) == cplx(-1 / (h * h)));

  const auto s = discretize_schrodinger(kScarf, Grid(6.0, 101), 2);
  CHECK(s.m.transpose().dense().isApprox(s.m.dense(), 1e-14));
  CHECK_FALSE(s.m.adjoint().dense().isApprox(s.m.dense(), 1e-6));
}

TEST_CASE("constant potentials shift the spectrum") {
  const Grid g(3.0, 61);
  const auto a = eig_complex_dense(discretize_schrodinger(kZero, g), false);
  const auto b = eig_complex_dense(discretize_schrodinger([](double) { return cplx(0.7, 0.2); }, g), false);
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(std::abs(b.values[i] - a.values[i] - cplx(0.7, 0.2)) < 1e-10);
}

TEST_CASE("dense eigenvalues") {
  Eigen::MatrixXcd t(2, 2);
  t << 1.0, I, 0.0, 2.0;
  const auto r = eig_complex_dense(t);
  CHECK(std::abs(r.values[0] - 1.0) < 1e-14);
  CHECK(std::abs(r.values[1] - 2.0) < 1e-14);
  CHECK(r.max_residual <= 1e-8);

  const double eps = 0.09;
  Eigen::MatrixXcd e(2, 2);
  e << 0.0, 1.0, eps, 0.0;
  const auto re = eig_complex_dense(e);
  CHECK(std::abs(re.values[0] + 0.3) < 1e-14);
  CHECK(std::abs(re.values[1] - 0.3) < 1e-14);

  const Grid box(10.0, 201);
  const auto fb = eig_complex_dense(discretize_schrodinger(kZero, box), true);
  const double exact = std::pow(std::numbers::pi / 20.0, 2);
  CHECK(std::abs(fb.values[0] - exact) < 1e-4);
  CHECK(fb.max_residual <= 1e-8);

  CHECK_THROWS(eig_complex_dense(Eigen::MatrixXcd::Identity(10, 10), false, 5));
}

TEST_CASE("dense solver is similarity invariant") {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-1, 1), ph(0, 2 * std::numbers::pi);
  Eigen::MatrixXcd m(30, 30);
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) m(i, j) = {u(rng), u(rng)};
  Eigen::VectorXcd d(30);
  for (auto &v : d) v = std::polar(1.0, ph(rng));
  const Eigen::MatrixXcd s = d.asDiagonal() * m * d.conjugate().asDiagonal();
  const auto a = eig_complex_dense(m, false), b = eig_complex_dense(s, false);
  for (int i = 0; i < 30; ++i) CHECK(std::abs(a.values[i] - b.values[i]) < 1e-9);
}

TEST_CASE("tridiagonal QL matches the dense solver") {
  const Grid g(8.0, 301);
  const auto m = discretize_schrodinger(kScarf, g, 2);
  CVector diag, off;
  for (int i = 0; i < m.size(); ++i) diag.push_back(m.m.get(i, i));
  for (int i = 0; i + 1 < m.size(); ++i) off.push_back(m.m.get(i, i + 1));
  auto ql = eig_symmetric_tridiagonal(diag, off);
  std::sort(ql.begin(), ql.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  const auto dense = eig_complex_dense(m, false);
  for (std::size_t i = 0; i < ql.size(); ++i) CHECK(std::abs(ql[i] - dense.values[i]) < 1e-8);
}

TEST_CASE("real potentials give real spectra") {
  const auto m = discretize_schrodinger(kWell, Grid(8.0, 201), 2);
  const auto r = eig_complex_dense(m, false);
  const double norm = m.m.inf_norm();
  for (auto v : r.values) CHECK(std::abs(v.imag()) <= 1e-8 * norm);
}

TEST_CASE("bound spectra") {
  const Grid g(15.0, 3001);
  const auto well = bound_spectrum(kWell, g);
  REQUIRE(well.size() == 1);
  CHECK(std::abs(well[0] + std::pow((std::sqrt(5.0) - 1) / 2, 2)) < 2e-3);

  const auto scarf = bound_states(kScarf, g);
  REQUIRE(scarf.size() == 1);
  CHECK(std::abs(scarf[0].value + 0.25) < 2e-3);
  CHECK(std::abs(scarf[0].value.imag()) <= 2e-3);
  CHECK(scarf[0].residual <= 1e-8);

  CHECK(bound_spectrum(kZero, g).empty());

  OracleOptions dense;
  dense.force_dense = true;
  const auto small = bound_spectrum(kScarf, Grid(15.0, 601), dense);
  const auto fast = bound_spectrum(kScarf, Grid(15.0, 601));
  REQUIRE(small.size() == fast.size());
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(std::abs(small[i] - fast[i]) < 1e-9);
}

TEST_CASE("domain must let the potential decay") {
  CHECK_THROWS_AS(bound_spectrum(kWell, Grid(2.0, 201)), DomainTooSmall);
}

TEST_CASE("spectrum matching") {
  const auto same = match_spectra({-1.0, -0.25}, {-1.0, -0.25}, 2e-3);
  CHECK(same.all_matched());
  for (const auto &e : same.entries) CHECK(e.abs_err == 0.0);

  const auto near = match_spectra({-0.25}, {-0.2493}, 2e-3);
  CHECK(near.all_matched());
  CHECK(near.entries[0].abs_err == Catch::Approx(7e-4).margin(1e-12));

  const auto none = match_spectra({-1.0}, {}, 1.0);
  CHECK_FALSE(none.all_matched());
  CHECK_FALSE(none.entries[0].matched);
}

TEST_CASE("convergence studies") {
  const std::vector<Grid> grids = {Grid(15.0, 751), Grid(15.0, 1501), Grid(15.0, 3001)};
  const auto exact = -std::pow((std::sqrt(5.0) - 1) / 2, 2);
  const auto r2 = convergence_study("order2", eigenvalue_error(kWell, exact), grids);
  for (double q : r2.ratios) CHECK((q >= 3.5 && q <= 4.5));
  CHECK_FALSE(r2.inconclusive);

  const auto flat = convergence_study("flat", [](const Grid &) { return 1.0; }, grids);
  CHECK(flat.inconclusive);
  for (double q : flat.ratios) CHECK(q == Catch::Approx(1.0));

  CHECK_THROWS_AS(convergence_study("bad", [](const Grid &) { return 1.0; }, {Grid(1, 11), Grid(1, 13)}),
                  PreconditionError);
}

TEST_CASE("fourth-order first-derivative residual converges at h^4") {
  // (d/dx + g) on a Gaussian against the analytic result
  const std::vector<Grid> grids = {Grid(6.0, 201), Grid(6.0, 401), Grid(6.0, 801)};
  const auto res = convergence_study(
      "order4",
      [](const Grid &g) {
        CVector f;
        for (double x : g.points()) f.push_back(std::exp(-x * x));
        const auto m = first_derivative_matrix(g.n(), g.h(), 4);
        const auto d = m.apply(f);
        double e = 0;
        for (int i = 2; i < g.n() - 2; ++i) e = std::max(e, std::abs(d[i] + 2 * g.x(i) * f[i]));
        return e;
      },
      grids);
  for (double q : res.ratios) CHECK((q >= 14 && q <= 18));
}
