#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ptweyl/band_matrix.hpp"
#include "ptweyl/errors.hpp"
#include "ptweyl/grid.hpp"
#include "ptweyl/polynomial.hpp"
#include "ptweyl/stencil.hpp"

using namespace ptweyl;
using Catch::Matchers::WithinAbs;

TEST_CASE("grid is symmetric with a node at the origin") {
  Grid g(10.0, 401);
  CHECK(g.h() == Catch::Approx(0.05));
  CHECK(g.x(200) == Catch::Approx(0.0).margin(1e-14));
  CHECK(g.points().size() == 401);
  CHECK(g.interior_points().size() == 399);
  CHECK(g.refined().n() == 801);
  CHECK_NOTHROW(require_symmetric(g.points()));
}

TEST_CASE("grid rejects even or tiny point counts") {
  CHECK_THROWS_AS(Grid(1.0, 4), InvalidModel);
  CHECK_THROWS_AS(Grid(1.0, 3), InvalidModel);
  CHECK_THROWS_AS(Grid(-1.0, 11), InvalidModel);
  CHECK_THROWS_AS(require_symmetric({0.0, 1.0, 2.0}), PreconditionError);
}

TEST_CASE("fourth-order derivatives converge at h^4") {
  auto err = [](int n) {
    Grid g(2.0, n);
    CVector f;
    for (double x : g.points()) f.push_back(std::sin(x) + I * std::exp(-x * x));
    const auto d1 = derivative4(f, g.h());
    const auto d2 = second_derivative4(f, g.h());
    double e1 = 0, e2 = 0;
    for (int i = 0; i < n; ++i) {
      const double x = g.x(i);
      e1 = std::max(e1, std::abs(d1[i] - (std::cos(x) - 2.0 * I * x * std::exp(-x * x))));
      e2 = std::max(e2, std::abs(d2[i] - (-std::sin(x) + I * (4 * x * x - 2) * std::exp(-x * x))));
    }
    return std::pair{e1, e2};
  };
  const auto [a1, a2] = err(101);
  const auto [b1, b2] = err(201);
  CHECK(a1 / b1 > 12.0);
  CHECK(a2 / b2 > 7.0);  // one-sided edge second derivative loses an order
  CHECK(b1 < 1e-6);
}

TEST_CASE("derivative stencils need seven samples") {
  CHECK_THROWS(derivative4(CVector(6, 1.0), 0.1));
}

TEST_CASE("second derivative matrix has the 1 -2 1 pattern") {
  const auto m = second_derivative_matrix(5, 0.5, 2);
  CHECK(m.get(2, 2) == cplx(-8.0));
  CHECK(m.get(2, 1) == cplx(4.0));
  CHECK(m.get(2, 3) == cplx(4.0));
  CHECK(m.get(0, 2) == cplx(0.0));
  const auto m4 = second_derivative_matrix(9, 1.0, 4);
  CHECK(m4.bandwidth() == 2);
  CHECK(m4.get(4, 4).real() == Catch::Approx(-2.5));
}

TEST_CASE("band matrix algebra matches dense algebra") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  BandMatrix a(12, 2), b(12, 1);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      if (a.in_band(i, j)) a.set(i, j, {u(rng), u(rng)});
      if (b.in_band(i, j)) b.set(i, j, {u(rng), u(rng)});
    }
  CHECK((a * b).dense().isApprox(a.dense() * b.dense(), 1e-13));
  CHECK((a + b).dense().isApprox(a.dense() + b.dense(), 1e-13));
  CHECK((a - b).dense().isApprox(a.dense() - b.dense(), 1e-13));
  CHECK(a.adjoint().dense().isApprox(a.dense().adjoint(), 1e-13));
  CHECK(a.transpose().dense().isApprox(a.dense().transpose(), 1e-13));
  CVector x(12);
  for (auto &v : x) v = {u(rng), u(rng)};
  const auto y = a.apply(x);
  Eigen::VectorXcd xe = Eigen::Map<Eigen::VectorXcd>(x.data(), 12);
  const Eigen::VectorXcd ye = a.dense() * xe;
  for (int i = 0; i < 12; ++i) CHECK(std::abs(y[i] - ye[i]) < 1e-13);
  CHECK(a.is_finite());
  CHECK_THROWS(a.set(0, 5, 1.0));
}

TEST_CASE("polynomial arithmetic") {
  const Poly p{1.0, 2.0, 3.0};
  const Poly q{0.0, I};
  CHECK(p.degree() == 2);
  CHECK(Poly{}.degree() == -1);
  CHECK(p(2.0) == cplx(17.0));
  CHECK(p.derivative()(1.0) == cplx(8.0));
  CHECK((p * q)(1.0) == 6.0 * I);
  CHECK((p - p).degree() == -1);
  CHECK(Poly{1.0, 1e-20}.numeric_degree() == 0);
}
