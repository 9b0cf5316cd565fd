#include "neel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "neel/errors.hpp"

namespace neel {
namespace {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1]; positive half listed.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
double norm_of(const T& v) {
  return std::abs(v);
}

template <typename T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fv1[7], fv2[7];
  const T fc = f(c);
  T resk = kWgk[7] * fc;
  T resg = kWg[3] * fc;
  double resabs = kWgk[7] * norm_of(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    fv1[i] = f(c - dx);
    fv2[i] = f(c + dx);
    resk += kWgk[i] * (fv1[i] + fv2[i]);
    resabs += kWgk[i] * (norm_of(fv1[i]) + norm_of(fv2[i]));
    if (i % 2 == 1) resg += kWg[i / 2] * (fv1[i] + fv2[i]);
  }
  // Error sharpening against the variation around the mean, as in QUADPACK.
  const T reskh = resk * 0.5;
  double resasc = kWgk[7] * norm_of(T(fc - reskh));
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] * (norm_of(T(fv1[i] - reskh)) + norm_of(T(fv2[i] - reskh)));
  }
  resabs *= h;
  resasc *= h;
  double err = norm_of(T(resk - resg)) * h;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double kEps = 2.220446049250313e-16;
  if (resabs > 1e-290) err = std::max(kEps * 50.0 * resabs, err);
  return {a, b, T(resk * h), err};
}

template <typename T, typename F>
void adapt(const F& f, double a, double b, const QuadratureSettings& s, T* value,
           double* error, int* count) {
  std::priority_queue<Panel<T>> heap;
  Panel<T> first = gk15<T>(f, a, b);
  T total = first.value;
  double toterr = first.error;
  heap.push(std::move(first));
  int n = 1;
  const double width_floor = 1e-15 * (std::abs(a) + std::abs(b) + 1.0);
  while (toterr > std::max(s.abs_tol, s.rel_tol * norm_of(total))) {
    if (n >= s.max_intervals) {
      std::ostringstream os;
      os << "adaptive quadrature used " << n << " intervals on [" << a << ", " << b
         << "] without reaching tolerance (error " << toterr << ")";
      throw ConvergenceError(os.str());
    }
    Panel<T> worst = heap.top();
    heap.pop();
    if (worst.b - worst.a < width_floor) {
      std::ostringstream os;
      os << "adaptive quadrature stalled at interval width " << (worst.b - worst.a)
         << " near x = " << worst.a << " (error " << toterr << ")";
      throw ConvergenceError(os.str());
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel<T> left = gk15<T>(f, worst.a, mid);
    Panel<T> right = gk15<T>(f, mid, worst.b);
    total = total - worst.value + left.value + right.value;
    toterr += left.error + right.error - worst.error;
    if (toterr < 0) toterr = 0;
    heap.push(std::move(left));
    heap.push(std::move(right));
    ++n;
  }
  *value = total;
  *error = toterr;
  *count = n;
}

}  // namespace

QuadratureResult integrate(const RealFn& f, double a, double b,
                           const QuadratureSettings& s) {
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0, 0};
    throw std::domain_error("integrate: reversed interval");
  }
  QuadratureResult r;
  adapt<double>(f, a, b, s, &r.value, &r.error, &r.intervals);
  return r;
}

ComplexQuadratureResult integrate_complex(const ComplexFn& f, double a, double b,
                                          const QuadratureSettings& s) {
  if (!(a < b)) {
    if (a == b) return {{0.0, 0.0}, 0.0, 0};
    throw std::domain_error("integrate_complex: reversed interval");
  }
  ComplexQuadratureResult r;
  adapt<std::complex<double>>(f, a, b, s, &r.value, &r.error, &r.intervals);
  return r;
}

QuadratureResult integrate_sqrt(const RealFn& f, double a, double b,
                                const QuadratureSettings& s) {
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0, 0};
    throw std::domain_error("integrate_sqrt: reversed interval");
  }
  const double w = b - a;
  auto g = [&](double t) {
    const double st = std::sin(t);
    const double x = a + w * st * st;
    return f(x) * w * std::sin(2.0 * t);
  };
  QuadratureResult r;
  adapt<double>(g, 0.0, 1.5707963267948966, s, &r.value, &r.error, &r.intervals);
  return r;
}

ComplexQuadratureResult integrate_sqrt_complex(const ComplexFn& f, double a, double b,
                                               const QuadratureSettings& s) {
  if (!(a < b)) {
    if (a == b) return {{0.0, 0.0}, 0.0, 0};
    throw std::domain_error("integrate_sqrt_complex: reversed interval");
  }
  const double w = b - a;
  auto g = [&](double t) -> std::complex<double> {
    const double st = std::sin(t);
    const double x = a + w * st * st;
    return f(x) * (w * std::sin(2.0 * t));
  };
  ComplexQuadratureResult r;
  adapt<std::complex<double>>(g, 0.0, 1.5707963267948966, s, &r.value, &r.error,
                              &r.intervals);
  return r;
}

QuadratureResult integrate_log0(const RealFn& f, double b,
                                const QuadratureSettings& s) {
  if (!(b > 0)) {
    if (b == 0) return {0.0, 0.0, 0};
    throw std::domain_error("integrate_log0: upper limit must be positive");
  }
  // x = b e^{-t}; the image of [0, t_max] misses (0, b e^{-t_max}), whose
  // contribution is O(x_min log x_min) and is kept below the tolerance.
  const double floor_x = std::min(1e-16, 0.01 * s.abs_tol);
  const double t_max = std::log(std::max(4.0, b / floor_x));
  auto g = [&](double t) {
    const double x = b * std::exp(-t);
    return f(x) * x;
  };
  QuadratureResult r;
  adapt<double>(g, 0.0, t_max, s, &r.value, &r.error, &r.intervals);
  return r;
}

QuadratureResult integrate_panels(const RealFn& f, const std::vector<double>& pts,
                                  const QuadratureSettings& s) {
  if (pts.size() < 2) throw std::domain_error("integrate_panels: need >= 2 points");
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    QuadratureResult r = integrate(f, pts[i], pts[i + 1], s);
    total.value += r.value;
    total.error += r.error;
    total.intervals += r.intervals;
  }
  return total;
}

}  // namespace neel
