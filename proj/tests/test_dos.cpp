#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "neel/dos.hpp"
#include "neel/quadrature.hpp"
#include "neel/special_functions.hpp"

using namespace neel;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

// High-precision references computed once with an independent
// arbitrary-precision evaluation of the same integrals.
struct Anchor {
  double eps, tz, value;
};
constexpr Anchor kN0Anchors[] = {
    {0.1, 0.0, 0.2571435778811237959},
    {1.0, 0.0, 0.1419107580621985533},
    {2.0, 0.0, 0.1092503589739431499},
    {3.5, 0.0, 0.0849771868713461926},
};
constexpr Anchor kNtzAnchors[] = {
    {0.0, 0.2, 0.22217927625816508},   {0.0, 0.5, 0.17637278314689878},
    {0.0, 1.0, 0.14267298272301944},   {0.0, 1.5, 0.12375243951294358},
    {0.3, 0.2, 0.22231622901930187},   {0.5, 0.5, 0.1765925576930764},
    {1.0, 1.0, 0.14316121752539737},   {1.3, 0.5, 0.13954566480412907},
    {2.0, 0.5, 0.11282380949357112},   {2.7, 0.7, 0.090230178772227939},
    {3.0, 0.5, 0.092891939002807119},  {4.2, 0.5, 0.037174178638249399},
    {4.9, 0.5, 0.011520725140416174},  {0.05, 1.0, 0.14267418904402154},
};
}  // namespace

TEST_CASE("n0 quadrature anchors") {
  for (const auto& a : kN0Anchors) {
    CHECK(n0(a.eps) == doctest::Approx(a.value).epsilon(1e-12));
  }
}

TEST_CASE("n0 support, evenness, singularity") {
  CHECK(n0(4.5) == 0.0);
  CHECK(n0(4.0) == 0.0);
  CHECK(n0(-1.3) == n0(1.3));
  CHECK_THROWS_AS(n0(0.0), std::domain_error);
  // one-sided value at the band edge is 1/(4 pi)
  CHECK(n0(4.0 - 1e-9) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-6));
}

TEST_CASE("fast path against the quadrature oracle on a 100-point grid") {
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double eps = 4.0 * i / 101.0;
    worst = std::max(worst, std::abs(detail::n0_fast(eps) - n0(eps)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("n_tz anchors") {
  for (const auto& a : kNtzAnchors) {
    INFO("eps=", a.eps, " tz=", a.tz);
    CHECK(std::abs(n_tz(a.eps, a.tz) - a.value) < 5e-12);
  }
}

TEST_CASE("n_tz support, evenness, domain") {
  CHECK(n_tz(5.1, 0.5) == 0.0);
  CHECK(n_tz(-0.3, 0.5) == n_tz(0.3, 0.5));
  CHECK_THROWS_AS(n_tz(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(n_tz(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(n_tz(1.0, -0.5), std::domain_error);
}

TEST_CASE("normalization of the density") {
  // 2 int_0^edge N = 1: the band energy is a probability distribution.
  QuadratureSettings s;
  s.abs_tol = 1e-11;
  for (double tz : {0.2, 0.5, 1.0, 1.5}) {
    const double edge = 4.0 + 2.0 * tz;
    auto f = [tz](double e) { return n_tz(e, tz); };
    double total = integrate_log0(f, std::min(2.0 * tz, 4.0 - 2.0 * tz) / 2, s).value;
    std::vector<double> pts{std::min(2.0 * tz, 4.0 - 2.0 * tz) / 2,
                            std::min(2.0 * tz, 4.0 - 2.0 * tz),
                            std::max(2.0 * tz, 4.0 - 2.0 * tz), 4.0 + 2.0 * tz - 1e-13};
    total += integrate_panels(f, pts, s).value;
    CHECK(2.0 * total == doctest::Approx(1.0).epsilon(1e-8));
  }
  auto f0 = [](double e) { return n0(e); };
  double total0 = integrate_log0(f0, 1.0, s).value;
  total0 += integrate_panels(f0, {1.0, 3.9, 4.0 - 1e-13}, s).value;
  CHECK(2.0 * total0 == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("moment identities of the out-of-plane average") {
  // 2 int_0^2 u^j / (pi sqrt(4-u^2)) du = 2^j Gamma((j+1)/2)/(sqrt(pi) Gamma(j/2+1))
  for (int j = 0; j <= 6; ++j) {
    auto f = [j](double u) { return std::pow(u, j) / std::sqrt(4.0 - u * u); };
    const double lhs = 2.0 / kPi * integrate_sqrt(f, 0.0, 2.0).value;
    const double rhs = std::pow(2.0, j) * gamma_fn((j + 1) / 2.0) /
                       (std::sqrt(kPi) * gamma_fn(j / 2.0 + 1.0));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("analytic continuation at interior real points") {
  for (double e : {0.5, 1.0, 2.0, 3.0}) {
    const std::complex<double> v = n0_tilde({e, 0.0});
    CHECK(std::abs(v - std::complex<double>(n0(e), 0.0)) < 1e-9);
  }
}

TEST_CASE("continuation anchor off the real axis") {
  const std::complex<double> v = n0_tilde({0.0, 2.0});
  CHECK(std::real(v) == doctest::Approx(0.10227896367130917).epsilon(1e-10));
  CHECK(std::imag(v) == doctest::Approx(-0.075201214410303227).epsilon(1e-10));
  // same point at two quadrature resolutions
  QuadratureSettings loose;
  loose.abs_tol = 1e-9;
  loose.rel_tol = 1e-8;
  CHECK(std::abs(n0_tilde({0.0, 2.0}, loose) - v) < 1e-9);
}

TEST_CASE("boundary values on the negative cut") {
  const std::complex<double> v = n0_tilde({-1.5, 0.0});
  CHECK(std::real(v) == doctest::Approx(0.12254133476424005).epsilon(1e-8));
  CHECK(std::imag(v) == doctest::Approx(-0.16524130755541834).epsilon(1e-8));
  // reflection: the real part of the boundary value reproduces n0 across
  // the cut
  for (double r : {0.5, 1.5, 3.0}) {
    const std::complex<double> b = n0_tilde({-r, 1e-6});
    CHECK(std::abs(std::real(b) - n0(r)) < 1e-5);
  }
}

TEST_CASE("continuation domain errors") {
  CHECK_THROWS_AS(n0_tilde({5.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(n0_tilde({4.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(n0_tilde({1.0, -0.5}), std::domain_error);
}

TEST_CASE("Taylor coefficients at the band center") {
  QuadratureSettings s;
  auto c = n_tz_taylor(0.5, 2, s);
  REQUIRE(c.size() == 5);
  // c[0] is produced by the contour route, independent of the direct
  // quadrature; agreement ties the two evaluators together.
  CHECK(c[0] == doctest::Approx(n_tz(0.0, 0.5, s)).epsilon(1e-10));
  CHECK(c[1] == 0.0);
  CHECK(c[3] == 0.0);
  CHECK(c[2] == doctest::Approx(8.7537409971527e-4).epsilon(1e-7));
  // central second difference (evenness folds the two wings) with one
  // Richardson sweep as the oracle
  auto second = [&](double h) {
    return 2.0 * (n_tz(h, 0.5, s) - c[0]) / (h * h);
  };
  const double d1 = second(1e-3);
  const double d2 = second(5e-4);
  const double fd = (4.0 * d2 - d1) / 3.0;
  CHECK(2.0 * c[2] == doctest::Approx(fd).epsilon(1e-5));
}

TEST_CASE("Taylor truncation error scales as the fourth power") {
  QuadratureSettings s;
  auto c = n_tz_taylor(0.5, 2, s);
  double err[3];
  int i = 0;
  for (double e : {0.2, 0.1, 0.05}) {
    err[i++] = std::abs(n_tz(e, 0.5, s) - (c[0] + c[2] * e * e));
  }
  CHECK(err[0] / err[1] == doctest::Approx(16.0).epsilon(0.7));
  CHECK(err[1] / err[2] == doctest::Approx(16.0).epsilon(0.7));
}

TEST_CASE("Taylor window enforcement") {
  CHECK_THROWS_AS(n_tz_taylor(0.01, 2), std::domain_error);
  CHECK_THROWS_AS(n_tz_taylor(1.99, 2), std::domain_error);
  CHECK_THROWS_AS(n_tz_taylor(0.5, 9), std::domain_error);
}

TEST_CASE("evaluator basics") {
  DosEvaluator d(0.5);
  CHECK(d.tz() == 0.5);
  CHECK(d.band_edge() == 5.0);
  CHECK(d.at_zero() == doctest::Approx(0.17637278314689878).epsilon(1e-10));
  CHECK(d.value(5.1) == 0.0);
  CHECK(d.value(-0.3) == d.value(0.3));
  CHECK_THROWS_AS(DosEvaluator(2.0), std::domain_error);
  DosEvaluator d0(0.0);
  CHECK(d0.value(1.0) == doctest::Approx(n0(1.0)).epsilon(1e-10));
  CHECK_THROWS_AS(d0.at_zero(), std::domain_error);
}

TEST_CASE("interpolant at the documented node count") {
  auto fit = build_interpolant(0.5, 256);
  CHECK(fit.sup_error < 1e-8);
}

TEST_CASE("interpolant accuracy and support") {
  DosEvaluator d(0.5);
  d.build_interpolant();
  CHECK(d.has_interpolant());
  CHECK(d.interpolant_sup_error() < 1e-8);
  double worst = 0.0;
  for (int i = 1; i < 40; ++i) {
    const double e = 5.0 * i / 40.0;
    worst = std::max(worst, std::abs(d.value(e) - d.direct(e)));
  }
  CHECK(worst < 1e-8);
  CHECK(d.value(5.2) == 0.0);
  CHECK(d.value(-1.0) == d.value(1.0));
}
