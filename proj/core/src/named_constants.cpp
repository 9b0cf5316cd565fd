#include "neel/named_constants.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "neel/series.hpp"
#include "neel/special_functions.hpp"

namespace neel {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kPiSq = 9.869604401089358;

std::mutex g_mu;
NamedConstants g_cache;

// integral_0^X eps^(n-1) (c + d ln(16/eps)) d eps, n >= 1.
double log_segment(int n, double c, double d, double x) {
  return std::pow(x, n) * ((c + d * std::log(16.0 / x)) / n + d / (n * n));
}

Estimate a0_impl(const QuadratureSettings& s) {
  // Split at 0.1: below it the integrand is the series tail over eps, whose
  // primitive is closed form; above it the subtraction is benign and the
  // closed-form density makes panels cheap. The n = 0 table entry cancels
  // against the subtracted log exactly, so the sum starts at n = 2.
  const double x_cut = 0.1;
  const SeriesTable t = assemble_series_table(10);
  double series_part = 0.0;
  for (int n = 2; n <= t.order; ++n) {
    series_part += log_segment(n, t.c[n], t.d[n], x_cut);
  }
  auto f = [](double eps) {
    return (detail::n0_fast(eps) - std::log(16.0 / eps) / (2.0 * kPiSq)) / eps;
  };
  const std::vector<double> pts{x_cut, 1.0, 3.6, 4.0};
  double direct = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const QuadratureResult r = integrate(f, pts[i], pts[i + 1], s);
    direct += r.value;
    err += r.error;
  }
  // Dropped series orders are ~1e-22 here; fold them into rounding noise.
  return {series_part + direct, err + 1e-15};
}

Estimate a1_impl(const QuadratureSettings& s) {
  const Estimate a0 = const_a0_estimate(s);
  auto f = [](double x) {
    const double lx = std::log(x);
    const double ch = std::cosh(x);
    return lx * lx / (ch * ch);
  };
  const QuadratureResult low = integrate_log0(f, 1.0, s);
  const QuadratureResult high = integrate(f, 1.0, 45.0, s);
  const double sq1 = 2.0 * std::log(2.0);
  const double sq2 = kEulerGamma + 2.0 * std::log(2.0) - std::log(kPi);
  const double value =
      -4.0 * kPiSq * a0.value - (low.value + high.value) + sq1 * sq1 + sq2 * sq2;
  const double err = 4.0 * kPiSq * a0.error + low.error + high.error + 1e-15;
  return {value, err};
}

Estimate b0_impl(double tz, const DosEvaluator& dos,
                 const QuadratureSettings& s) {
  const double at0 = dos.at_zero();
  const double band = dos.band_edge();
  const double scale = std::min(2.0 * tz, 4.0 - 2.0 * tz);

  // Near zero the numerator cancels to rounding, so the difference quotient
  // is replaced by the even small-energy expansion, integrated termwise.
  double eps_c = 0.0;
  double series_part = 0.0;
  double series_err = 0.0;
  if (tz >= 0.05 && tz <= 1.95) {
    eps_c = 0.25 * scale;
    const std::vector<double> coef = n_tz_taylor(tz, 8, s);
    double last = 0.0;
    for (int j = 1; 2 * j < static_cast<int>(coef.size()); ++j) {
      last = coef[2 * j] * std::pow(eps_c, 2 * j) / (2 * j);
      series_part += last;
    }
    series_err = std::abs(last);
  } else {
    // Outside the contour window, fit the two leading even terms from two
    // sample points; the discarded order is eps_c^6 with a 1/tz^6-size
    // coefficient, negligible for eps_c this far inside the scale.
    eps_c = 1e-3 * scale;
    const double d1 = dos.value(0.5 * eps_c) - at0;
    const double d2 = dos.value(eps_c) - at0;
    const double x1 = 0.25 * eps_c * eps_c, x2 = eps_c * eps_c;
    const double c4 = (d2 / x2 - d1 / x1) / (x2 - x1);
    const double c2 = d1 / x1 - c4 * x1;
    series_part = 0.5 * c2 * x2 + 0.25 * c4 * x2 * x2;
    series_err = std::abs(series_part) * 1e-6 + 1e-18;
  }

  auto f = [&dos, at0](double eps) { return (dos.value(eps) - at0) / eps; };
  std::vector<double> pts{eps_c};
  for (double k : {2.0 * tz, 4.0 - 2.0 * tz, 4.0 + 2.0 * tz}) {
    if (k > eps_c + 1e-12 && k < band - 1e-12) pts.push_back(k);
  }
  pts.push_back(band);
  std::sort(pts.begin(), pts.end());
  double direct = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const QuadratureResult r = integrate(f, pts[i], pts[i + 1], s);
    direct += r.value;
    err += r.error;
  }
  if (dos.has_interpolant()) {
    err += dos.interpolant_sup_error() * std::log(band / eps_c);
  }
  return {series_part + direct, err + series_err};
}

}  // namespace

Estimate const_a0_estimate(const QuadratureSettings& s) {
  std::lock_guard<std::mutex> lock(g_mu);
  if (!g_cache.have_a0) {
    g_cache.a0 = a0_impl(s);
    g_cache.have_a0 = true;
  }
  return g_cache.a0;
}

double const_a0() { return const_a0_estimate().value; }

Estimate const_a1_estimate(const QuadratureSettings& s) {
  {
    std::lock_guard<std::mutex> lock(g_mu);
    if (g_cache.have_a1) return g_cache.a1;
  }
  const Estimate e = a1_impl(s);
  std::lock_guard<std::mutex> lock(g_mu);
  g_cache.a1 = e;
  g_cache.have_a1 = true;
  return e;
}

double const_a1() { return const_a1_estimate().value; }

Estimate const_b0_estimate(double tz, const DosEvaluator& dos,
                           const QuadratureSettings& s) {
  if (dos.tz() != tz) {
    throw std::domain_error("const_b0: evaluator was built for a different tz");
  }
  {
    std::lock_guard<std::mutex> lock(g_mu);
    auto it = g_cache.b0.find(tz);
    if (it != g_cache.b0.end()) return it->second;
  }
  const Estimate e = b0_impl(tz, dos, s);
  std::lock_guard<std::mutex> lock(g_mu);
  g_cache.b0[tz] = e;
  return e;
}

double const_b0(double tz, const DosEvaluator& dos) {
  return const_b0_estimate(tz, dos).value;
}

NamedConstants named_constants_snapshot() {
  std::lock_guard<std::mutex> lock(g_mu);
  return g_cache;
}

}  // namespace neel
