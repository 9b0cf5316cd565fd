#include "neel/bcs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "neel/chebyshev.hpp"
#include "neel/errors.hpp"
#include "neel/roots.hpp"
#include "neel/special_functions.hpp"

namespace neel {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// tanh(sqrt(x^2+e^2)/(2y))/sqrt(x^2+e^2) - tanh(e/2)/e, the y = 0 case
// replacing the first tanh by 1. Finite at e = 0.
double kernel_diff(double x, double y, double e) {
  const double q = std::hypot(x, e);
  const double first = (y == 0.0 ? 1.0 : std::tanh(q / (2.0 * y))) / q;
  const double second = e < 1e-8 ? 0.5 * (1.0 - e * e / 12.0) : std::tanh(0.5 * e) / e;
  return first - second;
}

double sech2(double z) {
  const double c = std::cosh(z);
  return 1.0 / (c * c);
}

// ln(s + sqrt(s^2 - 1)) at s = 1 + w^2, written so the sqrt keeps full
// accuracy for small w.
double acosh_shift(double w) {
  return std::log(1.0 + w * w + w * std::sqrt(2.0 + w * w));
}

// Tail integral: -int_M^inf (1/sqrt(x^2+e^2) - 1/e) de = log1p(d/(2M)) with
// d = sqrt(M^2+x^2) - M evaluated cancellation-free.
double phi_tail(double m, double x) {
  const double d = x * x / (std::hypot(m, x) + m);
  return std::log1p(d / (2.0 * m));
}

double integrate_over(const RealFn& f, std::vector<double> pts,
                      const QuadratureSettings& s) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            pts.end());
  QuadratureSettings si = s;
  si.abs_tol = s.abs_tol / static_cast<double>(pts.size());
  si.rel_tol = 0.5 * s.rel_tol;
  return integrate_panels(f, pts, si).value;
}

}  // namespace

double h_fn(double a, const QuadratureSettings& s) {
  if (!(a > 0.0)) throw std::domain_error("h_fn: requires a > 0");
  // sech^2((1+w^2)a) is negligible once (1+w^2)a exceeds ~30.
  const double w_max = std::sqrt(std::max(30.0 / a - 1.0, 1e-12));
  auto f = [a](double w) {
    return w * acosh_shift(w) * sech2((1.0 + w * w) * a);
  };
  std::vector<double> pts{0.0, std::min(1.0, w_max), w_max};
  return 2.0 * a * integrate_over(f, std::move(pts), s);
}

double h_fn_prime(double a, const QuadratureSettings& s) {
  if (!(a > 0.0)) throw std::domain_error("h_fn_prime: requires a > 0");
  const double w_max = std::sqrt(std::max(30.0 / a - 1.0, 1e-12));
  auto f = [a](double w) {
    const double z = (1.0 + w * w) * a;
    return w * acosh_shift(w) * sech2(z) * (1.0 - 2.0 * z * std::tanh(z));
  };
  std::vector<double> pts{0.0, std::min(1.0, w_max), w_max};
  return 2.0 * integrate_over(f, std::move(pts), s);
}

double j_fn(double x, double y, const QuadratureSettings& s) {
  if (!(x > 0.0))
    throw std::domain_error("j_fn: requires x > 0 (diverges like -ln x)");
  if (y < 0.0) throw std::domain_error("j_fn: requires y >= 0");
  const double m = std::max(60.0, 30.0 * (1.0 + x + y));
  auto f = [x, y](double e) { return kernel_diff(x, y, e); };
  std::vector<double> pts{0.0, std::min(x, m), std::min(2.0 + 2.0 * y, m),
                          std::min(10.0 * (1.0 + x + y), m), m};
  return integrate_over(f, std::move(pts), s) - phi_tail(m, x);
}

double j_closed(double x, double y, const QuadratureSettings& s) {
  if (!(x > 0.0))
    throw std::domain_error("j_closed: requires x > 0 (diverges like -ln x)");
  if (y < 0.0) throw std::domain_error("j_closed: requires y >= 0");
  const double base = std::log(kPi) - kEulerGamma - std::log(x);
  if (y == 0.0) return base;
  return base - h_fn(x / (2.0 * y), s);
}

double f_bcs(double y, const QuadratureSettings& s) {
  if (y < 0.0 || y > 0.95)
    throw std::domain_error("f_bcs: y must lie in [0, 0.95]");
  if (y == 0.0) return kPi * std::exp(-kEulerGamma);
  auto g = [y, &s](double x) { return j_closed(x, y, s); };
  RootSettings rs;
  rs.x_tol = 1e-14;
  return find_root(g, 1e-6, 4.0, rs).x;
}

double f_bcs_prime(double y, const QuadratureSettings& s) {
  if (y < 0.0 || y > 0.95)
    throw std::domain_error("f_bcs_prime: y must lie in [0, 0.95]");
  if (y == 0.0) return 0.0;  // flat to all orders at the low edge
  const double x = f_bcs(y, s);
  const double a = x / (2.0 * y);
  const double hp = h_fn_prime(a, s);
  const double jx = -hp / (2.0 * y) - 1.0 / x;
  const double jy = hp * x / (2.0 * y * y);
  if (std::abs(jx) < 1e-8)
    throw ConvergenceError("f_bcs_prime: implicit derivative is singular");
  return -jy / jx;
}

double BcsCurve::f(double y) const {
  return ChebPanel(0.0, y_max, f_values).eval(y);
}

double BcsCurve::fprime(double y) const {
  return ChebPanel(0.0, y_max, fprime_values).eval(y);
}

BcsCurve build_bcs_curve(int n_nodes, double y_max, const QuadratureSettings& s) {
  if (n_nodes < 8) throw std::domain_error("build_bcs_curve: need >= 8 nodes");
  if (!(y_max > 0.0) || y_max > 0.95)
    throw std::domain_error("build_bcs_curve: y_max must lie in (0, 0.95]");
  BcsCurve curve;
  curve.y_max = y_max;
  curve.nodes.resize(n_nodes);
  curve.f_values.resize(n_nodes);
  curve.fprime_values.resize(n_nodes);
  for (int j = 0; j < n_nodes; ++j) {
    const double y = ChebPanel::node(0.0, y_max, n_nodes, j);
    curve.nodes[j] = y;
    curve.f_values[j] = f_bcs(y, s);
    curve.fprime_values[j] = f_bcs_prime(y, s);
  }
  // Non-increasing up to solver noise; the curve is exponentially flat at
  // the low edge, so adjacent nodes there tie to ~1e-14.
  for (int j = 0; j + 1 < n_nodes; ++j) {
    if (curve.f_values[j + 1] >= curve.f_values[j] + 1e-12)
      throw ConvergenceError("build_bcs_curve: curve is not decreasing");
  }
  // Validate on a denser grid than the nodes can alias.
  double sup = 0.0;
  const int m = 3 * n_nodes;
  for (int i = 1; i < m; ++i) {
    const double y = y_max * i / m;
    sup = std::max(sup, std::abs(curve.f(y) - f_bcs(y, s)));
  }
  curve.interp_error = sup;
  return curve;
}

double c1_fn(double y, const BcsCurve& curve, const QuadratureSettings& s) {
  if (y < 0.0 || y > curve.y_max)
    throw std::domain_error("c1_fn: y outside the tabulated window");
  const double x = curve.f(y);
  const double pref = x - y * curve.fprime(y);
  const double m = std::max(60.0, 30.0 * (1.0 + x + y));
  auto wk = [x, y](double e) {
    return std::log(16.0 / e) / (2.0 * kPi) * kernel_diff(x, y, e);
  };
  QuadratureSettings si = s;
  si.abs_tol = 0.5 * s.abs_tol;
  si.rel_tol = 0.5 * s.rel_tol;
  double total = integrate_log0(wk, 1.0, si).value;
  total += integrate_over(wk, {1.0, x > 1.0 ? x : 1.0, 2.0 + 2.0 * y,
                               10.0 * (1.0 + x + y), m},
                          si);
  // Beyond m the kernel is 1/sqrt(x^2+e^2) - 1/e up to an exponentially
  // small tanh deficit; the log weight integrates against it in closed form
  // plus a short series in q = (x/m)^2.
  const double q = (x / m) * (x / m);
  total += -std::log(16.0 / m) / (2.0 * kPi) * phi_tail(m, x) +
           (q / 8.0 - 3.0 * q * q / 128.0 + 5.0 * q * q * q / 576.0) /
               (2.0 * kPi);
  return pref * total;
}

double g_fn(double u, double tz, double y, double t_n, const DosEvaluator& dos,
            const BcsCurve& curve, const QuadratureSettings& s) {
  if (!(u > 0.0)) throw std::domain_error("g_fn: requires u > 0");
  if (!(tz > 0.0) || tz >= 2.0)
    throw std::domain_error("g_fn: requires 0 < tz < 2");
  if (dos.tz() != tz)
    throw std::domain_error("g_fn: evaluator was built for a different tz");
  if (!(t_n > 0.0)) throw std::domain_error("g_fn: requires t_n > 0");
  if (y < 0.0 || y > curve.y_max)
    throw std::domain_error("g_fn: y outside the tabulated window");
  const double x = curve.f(y);
  const double pref = x - y * curve.fprime(y);
  const double n0v = dos.at_zero();
  const double cut = dos.band_edge() / t_n;  // contrast is exactly -1 beyond
  const double m = std::max(cut, 30.0 * (1.0 + x + y));
  auto f = [&dos, n0v, t_n, x, y, cut](double e) {
    const double ratio =
        e >= cut ? -1.0 : (dos.value(t_n * e) - n0v) / n0v;
    return ratio * kernel_diff(x, y, e);
  };
  std::vector<double> pts{0.0,
                          std::min(x, m),
                          std::min(2.0 * tz / t_n, m),
                          std::min((4.0 - 2.0 * tz) / t_n, m),
                          std::min(cut, m),
                          std::min(30.0 * (1.0 + x + y), m),
                          m};
  const double total = integrate_over(f, std::move(pts), s) + phi_tail(m, x);
  return pref * total;
}

}  // namespace neel
