#include "qrev/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace qrev;

TEST_CASE("Gauss-Legendre weights sum to the interval length") {
  for (int order : {2, 5, 16, 32, 64}) {
    const GaussLegendre rule(order);
    CHECK(rule.weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
    // nodes symmetric and sorted
    for (int i = 0; i + 1 < order; ++i) CHECK(rule.nodes[i] < rule.nodes[i + 1]);
    for (int i = 0; i < order; ++i)
      CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[order - 1 - i]).epsilon(1e-14));
  }
}

TEST_CASE("rule of order n is exact for polynomials up to degree 2n-1") {
  const GaussLegendre rule(8);
  // int_0^1 x^15 dx = 1/16, degree 15 = 2*8-1
  const Real got = integrate_panels([](Real x) { return std::pow(x, 15); }, 0.0, 1.0, rule, 1);
  CHECK(got == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("panel-refined integration reaches tight tolerance on smooth peaks") {
  // int_-10^10 sech^4(x) dx = 4/3
  const Real got = integrate_adaptive([](Real x) {
    const Real s = 1.0 / std::cosh(x);
    return s * s * s * s;
  }, -10.0, 10.0);
  CHECK(got == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("oscillatory integrand converges too") {
  // int_0^pi sin^2(20 x) dx = pi/2
  const Real got = integrate_adaptive([](Real x) {
    const Real s = std::sin(20.0 * x);
    return s * s;
  }, 0.0, kPi);
  CHECK(got == doctest::Approx(0.5 * kPi).epsilon(1e-13));
}
