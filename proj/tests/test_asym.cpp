#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "neel/asym.hpp"
#include "neel/neel.hpp"
#include "neel/special_functions.hpp"

using namespace neel;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
const double kPieg = kPi * std::exp(-kEulerGamma);
}  // namespace

TEST_CASE("2D ordering asymptote against the direct solver") {
  DosEvaluator dos(0.0);
  double prev = 1e300;
  for (double u : {2.0, 1.0, 0.6, 0.4}) {
    const double ratio = tn_asym_2d(u) / solve_neel(u, 0.0, dos).t_n;
    CHECK(std::abs(ratio - 1.0) < std::abs(prev - 1.0) + 1e-12);
    prev = ratio;
  }
  CHECK(std::abs(prev - 1.0) < 0.03);
  CHECK(tn_asym_2d(0.3) < tn_asym_2d(0.5));
  CHECK_THROWS_AS(tn_asym_2d(0.0), std::domain_error);
}

TEST_CASE("3D ordering asymptote against the direct solver") {
  DosEvaluator dos(0.5);
  dos.build_interpolant();
  double prev = 1e300;
  for (double u : {2.0, 1.3, 1.0, 0.8}) {
    const double ratio = tn_asym_3d(u, 0.5, dos) / solve_neel(u, 0.5, dos).t_n;
    CHECK(std::abs(ratio - 1.0) < std::abs(prev - 1.0) + 1e-12);
    prev = ratio;
  }
  CHECK(std::abs(prev - 1.0) < 0.05);
  // prefactor: dividing out the exponential leaves (8 + 4 tz)/(pi e^-gamma)
  const double n0v = dos.at_zero();
  const double b0 = const_b0(0.5, dos);
  const double pref =
      tn_asym_3d(1.0, 0.5, dos) * std::exp((1.0 - b0) / n0v);
  CHECK(pref == doctest::Approx(10.0 / kPieg).epsilon(1e-10));
  CHECK_THROWS_AS(tn_asym_3d(1.0, 0.0, dos), std::domain_error);
}

TEST_CASE("gap-ratio asymptote, 2D form") {
  BcsCurve curve = build_bcs_curve(49);
  CHECK(mhat_asym_2d(0.0, 0.5, curve) == curve.f(0.5));
  // u -> 0 at the zero-temperature edge tends to the universal constant
  CHECK(mhat_asym_2d(1e-12, 0.0, curve) ==
        doctest::Approx(kPieg).epsilon(1e-6));
  const double v = mhat_asym_2d(0.64, 0.0, curve);
  CHECK(v == doctest::Approx(curve.f(0.0) + 0.8 * c1_fn(0.0, curve))
                 .epsilon(1e-12));
  CHECK_THROWS_AS(mhat_asym_2d(-1.0, 0.0, curve), std::domain_error);
}

TEST_CASE("gap-ratio asymptote, 3D form") {
  DosEvaluator dos(0.5);
  dos.build_interpolant();
  BcsCurve curve = build_bcs_curve(49);
  // without the subleading term the prediction is the universal curve
  CHECK(mhat_asym_3d(1.0, 0.5, 0.3, false, 0.0, dos, curve) == curve.f(0.3));
  const double tn = solve_neel(1.0, 0.5, dos).t_n;
  const double with_g = mhat_asym_3d(1.0, 0.5, 0.0, true, tn, dos, curve);
  CHECK(with_g == doctest::Approx(curve.f(0.0) +
                                  g_fn(1.0, 0.5, 0.0, tn, dos, curve))
                      .epsilon(1e-12));
  CHECK_THROWS_AS(mhat_asym_3d(1.0, 2.0, 0.0, false, 0.0, dos, curve),
                  std::domain_error);
}
