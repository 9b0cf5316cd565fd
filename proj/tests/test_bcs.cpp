#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "neel/bcs.hpp"
#include "neel/dos.hpp"
#include "neel/errors.hpp"
#include "neel/neel.hpp"
#include "neel/special_functions.hpp"

using namespace neel;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
const double kPieg = kPi * std::exp(-kEulerGamma);
}  // namespace

TEST_CASE("log moment of sech^2 is positive and decreasing") {
  const double h1 = h_fn(0.2);
  const double h2 = h_fn(0.5);
  const double h3 = h_fn(5.0);
  CHECK(h1 > h2);
  CHECK(h2 > h3);
  CHECK(h3 > 0.0);
  CHECK_THROWS_AS(h_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(h_fn(-1.0), std::domain_error);
}

TEST_CASE("difference integral agrees with its closed form") {
  CHECK(j_fn(1.0, 0.4) == doctest::Approx(0.449736081815).epsilon(1e-10));
  for (double x : {0.5, 1.0, 2.0}) {
    for (double y : {0.2, 0.5, 0.9}) {
      CHECK(std::abs(j_fn(x, y) - j_closed(x, y)) < 1e-8);
    }
  }
  // y = 0 convention: tanh factor is 1, closed form has no sech^2 moment
  CHECK(j_fn(2.0, 0.0) ==
        doctest::Approx(std::log(kPi) - kEulerGamma - std::log(2.0))
            .epsilon(1e-11));
  CHECK(std::abs(j_fn(kPieg, 0.0)) < 1e-10);
  CHECK_THROWS_AS(j_fn(0.0, 0.4), std::domain_error);
  CHECK_THROWS_AS(j_fn(-1.0, 0.4), std::domain_error);
}

TEST_CASE("small-gap limit of the difference integral") {
  // J(x -> 0, y) = -ln y; the gap dependence cancels between the two terms
  for (double y : {0.3, 0.7}) {
    CHECK(j_closed(1e-3, y) == doctest::Approx(-std::log(y)).epsilon(2e-3));
  }
}

TEST_CASE("universal curve values") {
  CHECK(f_bcs(0.0) == kPieg);  // exact by construction
  CHECK(f_bcs(0.5) == doctest::Approx(1.68782693132552).epsilon(1e-12));
  CHECK(f_bcs_prime(0.5) == doctest::Approx(-0.671709853055).epsilon(1e-9));
  CHECK(f_bcs_prime(0.0) == 0.0);
  CHECK_THROWS_AS(f_bcs(-0.1), std::domain_error);
  CHECK_THROWS_AS(f_bcs(0.96), std::domain_error);
}

TEST_CASE("derivative against finite differences") {
  for (double y : {0.3, 0.5, 0.8}) {
    const double h = 1e-5;
    const double fd = (f_bcs(y + h) - f_bcs(y - h)) / (2.0 * h);
    const double an = f_bcs_prime(y);
    CHECK(std::abs(fd - an) / std::abs(an) < 1e-6);
  }
}

TEST_CASE("rescaling fixed point") {
  // x = f(e^{J(x,y)} y) e^{-J(x,y)} holds identically in x
  for (double x : {1.0, 1.2, 2.0}) {
    for (double y : {0.2, 0.4}) {
      const double j = j_closed(x, y);
      const double ys = std::exp(j) * y;
      REQUIRE(ys <= 0.95);
      CHECK(f_bcs(ys) * std::exp(-j) == doctest::Approx(x).epsilon(1e-9));
    }
  }
}

TEST_CASE("tabulated curve") {
  BcsCurve curve = build_bcs_curve(49);
  CHECK(curve.nodes.front() == 0.0);
  CHECK(curve.nodes.back() == 0.95);
  CHECK(std::abs(curve.f_values.front() - kPieg) < 1e-8);
  CHECK(curve.interp_error < 1e-7);
  // decreasing, with a strictly negative derivative away from the flat edge
  for (std::size_t i = 1; i < curve.nodes.size(); ++i) {
    CHECK(curve.f_values[i] <= curve.f_values[i - 1] + 1e-12);
    if (curve.nodes[i] > 0.2) CHECK(curve.fprime_values[i] < 0.0);
  }
  CHECK(curve.f(0.5) == doctest::Approx(f_bcs(0.5)).epsilon(1e-10));
  CHECK(curve.fprime(0.5) == doctest::Approx(f_bcs_prime(0.5)).epsilon(1e-8));
}

TEST_CASE("square-root correction amplitude") {
  BcsCurve curve = build_bcs_curve(49);
  const double c10 = c1_fn(0.0, curve);
  CHECK(c10 == doctest::Approx(0.0457568743359).epsilon(1e-9));
  CHECK(std::abs(c10 - 0.04576) < 2e-4);
  const double c105 = c1_fn(0.5, curve);
  CHECK(c105 == doctest::Approx(0.0444903501428).epsilon(1e-9));
  // near-proportionality to the curve itself: the ratio drifts by under
  // 1e-3 across the window
  const double alpha0 = c10 / kPieg;
  CHECK(std::abs(alpha0 - 0.02594) < 2e-4);
  for (double y : {0.25, 0.5, 0.75}) {
    const double drift = c1_fn(y, curve) - alpha0 * curve.f(y);
    CHECK(drift > -1e-4);
    CHECK(drift < 1.1e-3);
  }
  CHECK_THROWS_AS(c1_fn(0.96, curve), std::domain_error);
}

TEST_CASE("3D subleading amplitude ordering") {
  DosEvaluator dos(0.5);
  dos.build_interpolant();
  BcsCurve curve = build_bcs_curve(49);
  double prev = 0.0;
  for (double u : {0.5, 0.7, 1.0}) {
    const double tn = solve_neel(u, 0.5, dos).t_n;
    const double g = g_fn(u, 0.5, 0.0, tn, dos, curve);
    CHECK(std::abs(g) > std::abs(prev));
    prev = g;
  }
  CHECK_THROWS_AS(g_fn(1.0, 0.5, 0.0, 0.0, dos, curve), std::domain_error);
  CHECK_THROWS_AS(g_fn(1.0, 0.3, 0.0, 0.01, dos, curve), std::domain_error);
}
