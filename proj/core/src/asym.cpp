#include "neel/asym.hpp"

#include <cmath>
#include <stdexcept>

#include "neel/special_functions.hpp"

namespace neel {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

double tn_asym_2d(double u) {
  if (!(u > 0.0)) throw std::domain_error("tn_asym_2d: requires u > 0");
  const double pieg = kPi * std::exp(-kEulerGamma);
  return 32.0 / pieg * std::exp(-std::sqrt(4.0 * kPi * kPi / u + const_a1()));
}

double tn_asym_3d(double u, double tz, const DosEvaluator& dos) {
  if (!(u > 0.0)) throw std::domain_error("tn_asym_3d: requires u > 0");
  if (!(tz > 0.0) || tz >= 2.0)
    throw std::domain_error("tn_asym_3d: requires 0 < tz < 2");
  const double pieg = kPi * std::exp(-kEulerGamma);
  const double n0v = dos.at_zero();
  const double b0 = const_b0(tz, dos);
  return (8.0 + 4.0 * tz) / pieg * std::exp(-(1.0 / u - b0) / n0v);
}

double mhat_asym_2d(double u, double y, const BcsCurve& curve,
                    const QuadratureSettings& s) {
  if (u < 0.0) throw std::domain_error("mhat_asym_2d: requires u >= 0");
  const double f = curve.f(y);
  if (u == 0.0) return f;
  return f + c1_fn(y, curve, s) * std::sqrt(u);
}

double mhat_asym_3d(double u, double tz, double y, bool include_g, double t_n,
                    const DosEvaluator& dos, const BcsCurve& curve,
                    const QuadratureSettings& s) {
  if (!(tz > 0.0) || tz >= 2.0)
    throw std::domain_error("mhat_asym_3d: requires 0 < tz < 2");
  const double f = curve.f(y);
  if (!include_g) return f;
  return f + g_fn(u, tz, y, t_n, dos, curve, s);
}

}  // namespace neel
