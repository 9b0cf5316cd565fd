#include "neel/dos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "neel/errors.hpp"

namespace neel {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPiSq = kPi * kPi;
constexpr double kHalfPi = 0.5 * kPi;

using cplx = std::complex<double>;

// n0 as a quadrature over theta with the band variable folded out. The
// integrand is smooth on (0, pi/2) but develops layers of width sqrt(eps)
// at both ends; splitting there keeps the error estimate honest.
double n0_quad(double eps, const QuadratureSettings& s) {
  const double c = 4.0 - eps;
  // Both radicands are written as sums of positive terms; the naive forms
  // 4 - c s2 and eps + c s2 cancel near the respective endpoints and the
  // rounding noise stalls the subdivision when eps is small.
  auto f = [eps](double th) {
    const double sn = std::sin(th);
    const double cs = std::cos(th);
    const double s2 = sn * sn;
    const double c2 = cs * cs;
    return 2.0 / (kPiSq * std::sqrt(4.0 * c2 + eps * s2) *
                  std::sqrt(eps * c2 + 4.0 * s2));
  };
  const double r = std::min(eps / c, 0.4);
  const double sq = std::sqrt(r);
  const std::vector<double> pts{0.0, std::asin(sq), std::acos(sq), kHalfPi};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += integrate(f, pts[i], pts[i + 1], s).value;
  }
  return total;
}

// Principal-branch continuation as a theta integral. Valid off the cuts;
// when re(w1) or re(w2) falls inside (0, 1) the integrand has a sharp
// interior layer there, so the quadrature is split at those angles.
cplx n0_tilde_theta(cplx z, const QuadratureSettings& s) {
  const cplx d = 4.0 - z;
  const cplx w1 = -z / d;
  const cplx w2 = 4.0 / d;
  auto f = [w1, w2](double th) {
    const double sn = std::sin(th);
    const cplx s2(sn * sn, 0.0);
    return 1.0 / (std::sqrt(s2 - w1) * std::sqrt(w2 - s2));
  };
  std::vector<double> pts{0.0, kHalfPi};
  for (double xr : {w1.real(), w2.real()}) {
    if (xr > 0.0 && xr < 1.0) pts.push_back(std::asin(std::sqrt(xr)));
  }
  std::sort(pts.begin(), pts.end());
  cplx total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += integrate_complex(f, pts[i], pts[i + 1], s).value;
  }
  return 2.0 * total / (kPiSq * d);
}

// The cut discontinuity across (-4, 0), written as two half-period
// integrals that stay regular on the whole segment.
cplx n0_tilde_cut_jump(cplx z, const QuadratureSettings& s) {
  const cplx d = 4.0 - z;
  const cplx w1 = -z / d;
  const cplx w2 = 4.0 / d;
  auto p1 = [w1, w2](double sv) {
    return 1.0 / (std::sqrt(sv * (1.0 - sv)) *
                  std::sqrt((w2 - w1 * sv) * (1.0 - w1 * sv)));
  };
  auto p3 = [w1, w2](double sv) {
    return 1.0 / (std::sqrt(sv * (1.0 - sv)) *
                  std::sqrt((w2 + (1.0 - w2) * sv) * (w2 - w1 + (1.0 - w2) * sv)));
  };
  const cplx s1 = integrate_sqrt_complex(p1, 0.0, 1.0, s).value;
  const cplx s3 = integrate_sqrt_complex(p3, 0.0, 1.0, s).value;
  return cplx(0.0, -2.0) * (s1 + s3) / (kPiSq * d);
}

// Boundary value on (-4, 0) taken from above, assembled from three real
// integrals with beta-type endpoint weights.
cplx n0_tilde_boundary(double r, const QuadratureSettings& s) {
  const double d = 4.0 + r;
  const double w1 = r / d;
  const double w2 = 4.0 / d;
  auto beta_int = [&s](auto g) {
    return integrate_sqrt(
               [&g](double sv) { return g(sv) / std::sqrt(sv * (1.0 - sv)); },
               0.0, 1.0, s)
        .value;
  };
  const double p1 = beta_int(
      [w1, w2](double sv) { return 1.0 / std::sqrt((w2 - w1 * sv) * (1.0 - w1 * sv)); });
  const double p2 = beta_int([w1, w2](double sv) {
    return 1.0 / std::sqrt((w1 + (w2 - w1) * sv) * (1.0 - w1 - (w2 - w1) * sv));
  });
  const double p3 = beta_int([w1, w2](double sv) {
    return 1.0 / std::sqrt((w2 + (1.0 - w2) * sv) * (w2 - w1 + (1.0 - w2) * sv));
  });
  return cplx(p2, -(p1 + p3)) / (kPiSq * d);
}

std::vector<double> band_kinks(double tz) {
  std::vector<double> k{2.0 * tz, 4.0 - 2.0 * tz, 4.0 + 2.0 * tz};
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end(),
                      [](double a, double b) { return std::abs(a - b) < 1e-12; }),
          k.end());
  return k;
}

void check_tz_open(double tz, const char* who) {
  if (!(tz > 0.0 && tz < 2.0)) {
    throw std::domain_error(std::string(who) + ": tz must lie in (0, 2)");
  }
}

}  // namespace

double n0(double eps, const QuadratureSettings& s) {
  eps = std::abs(eps);
  if (eps == 0.0) throw std::domain_error("n0: logarithmic divergence at eps = 0");
  if (eps >= 4.0) return 0.0;
  return n0_quad(eps, s);
}

std::complex<double> n0_tilde(std::complex<double> z, const QuadratureSettings& s) {
  if (z.imag() < 0.0) {
    throw std::domain_error("n0_tilde: lower half-plane; use conjugation symmetry");
  }
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (x == 0.0 || x >= 4.0) {
      throw std::domain_error("n0_tilde: argument on a branch point or the cut [4, inf)");
    }
    if (x < 0.0) {
      if (x <= -4.0) {
        throw std::domain_error("n0_tilde: boundary values supported on (-4, 0) only");
      }
      return n0_tilde_boundary(-x, s);
    }
  }
  return n0_tilde_theta(z, s);
}

namespace detail {

// n0 collapses to an arithmetic-geometric mean: the band integral is a
// complete elliptic integral with complementary modulus eps/4. Exact to
// rounding; the quadrature form above stays the acceptance reference.
double n0_fast(double eps) {
  eps = std::abs(eps);
  if (eps == 0.0) throw std::domain_error("n0_fast: logarithmic divergence at eps = 0");
  if (eps >= 4.0) return 0.0;
  double a = 1.0;
  double b = 0.25 * eps;
  for (int i = 0; i < 40 && a - b > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 1.0 / (2.0 * kPi * (a + b));
}

std::complex<double> n0_tilde_ext(std::complex<double> z, bool through_negative_cut,
                                  const QuadratureSettings& s) {
  if (z.imag() >= 0.0) return n0_tilde(z, s);
  if (!through_negative_cut) return n0_tilde_theta(z, s);
  return n0_tilde_theta(z, s) + n0_tilde_cut_jump(z, s);
}

}  // namespace detail

double n_tz(double eps, double tz, const QuadratureSettings& s) {
  check_tz_open(tz, "n_tz");
  eps = std::abs(eps);
  if (eps >= 4.0 + 2.0 * tz) return 0.0;

  QuadratureSettings si = s;
  si.abs_tol = 0.25 * s.abs_tol;  // four sub-integrals share the budget
  si.rel_tol = 0.5 * s.rel_tol;

  // The integrand vanishes where the inner argument leaves the band and has
  // a log spike where it crosses zero; end the range at the former and put
  // dedicated exponential panels around the latter. Every panel is written
  // in the offset from its own singular end, with that offset's anchor
  // computed once, so the weight and the inner argument stay smooth to
  // rounding even when the panel is 1e-12 wide. Forming 4 - u*u from u
  // directly would turn the last digits of u into node-to-node noise that
  // the error estimator correctly refuses to ignore.
  const double b = std::min(2.0, (4.0 - eps) / tz);
  const double u0 = -eps / tz;
  const double edge = eps + tz * b;  // inner argument at u = b, at most 4
  if (u0 <= -2.0 + 1e-12) {
    // Crossing at or left of the endpoint: rebuild the argument from the
    // offset x = u + 2, whose log layer of width delta/tz sits against the
    // weight singularity. An exponential panel resolves every layer scale.
    const double delta = eps - 2.0 * tz;
    // Near the endpoint, unfold the weight with x = s^2; the integrand in s
    // is then bounded and the exponential panel resolves the log knee at
    // s = sqrt(delta/tz) whatever its scale.
    auto g = [delta, tz](double sv) {
      double a = std::abs(delta + tz * sv * sv);
      if (a < 1e-300) a = 1e-300;
      return 2.0 * detail::n0_fast(a) / (kPi * std::sqrt(4.0 - sv * sv));
    };
    const double top = b + 2.0;
    const double xc = 0.5 * top < 1.0 ? 0.5 * top : 1.0;
    // Offset from the top end, where the inner argument reaches edge and the
    // weight may be a near-singular spike when top is close to 4.
    const double gap4 = std::max(4.0 - top, 0.0);
    auto hy = [edge, gap4, top, tz](double y) {
      double a = std::abs(edge - tz * y);
      if (a > 4.0 * (1.0 - 1e-16)) a = 4.0 * (1.0 - 1e-16);
      return detail::n0_fast(a) / (kPi * std::sqrt((top - y) * (gap4 + y)));
    };
    return integrate_log0(g, std::sqrt(xc), si).value +
           integrate_sqrt(hy, 0.0, top - xc, si).value;
  }
  // Crossing in the interior: split at u0 and at the midpoints toward each
  // endpoint. h0 and g0 anchor the weight around the crossing; the endpoint
  // panels use offsets from u = -2 and u = b.
  const double delta = eps - 2.0 * tz;
  const double h0 = -delta / tz;  // u0 + 2, kept exact near zero
  const double g0 = 4.0 - h0;    // 2 - u0
  auto hs = [delta, tz](double x) {
    double a = std::abs(delta + tz * x);
    if (a >= 4.0) return 0.0;
    if (a < 1e-300) a = 1e-300;
    return detail::n0_fast(a) / (kPi * std::sqrt(x * (4.0 - x)));
  };
  auto hlog = [h0, g0, tz](double x, int side) {
    const double wp = h0 + side * x;  // u + 2
    const double wm = g0 - side * x;  // 2 - u
    return detail::n0_fast(tz * x) / (kPi * std::sqrt(wp * wm));
  };
  const double bm2 = 2.0 - b;  // zero when the range runs to the endpoint
  auto hb = [edge, bm2, b, tz](double y) {
    double a = std::abs(edge - tz * y);
    if (a > 4.0 * (1.0 - 1e-16)) a = 4.0 * (1.0 - 1e-16);
    return detail::n0_fast(a) / (kPi * std::sqrt((2.0 + b - y) * (bm2 + y)));
  };
  const double half_right = 0.5 * (b - u0);
  double total = integrate_sqrt(hs, 0.0, 0.5 * h0, si).value;
  total += integrate_log0([&hlog](double x) { return hlog(x, -1); }, 0.5 * h0, si).value;
  total += integrate_log0([&hlog](double x) { return hlog(x, +1); }, half_right, si).value;
  total += integrate_sqrt(hb, 0.0, half_right, si).value;
  return total;
}

std::vector<double> n_tz_taylor(double tz, int j_max, const QuadratureSettings& s) {
  if (!(tz >= 0.05 && tz <= 1.95)) {
    throw std::domain_error("n_tz_taylor: tz outside the contour window [0.05, 1.95]");
  }
  if (j_max < 0 || j_max > 8) {
    throw std::domain_error("n_tz_taylor: j_max must lie in [0, 8]");
  }

  const int kCircle = 64;  // trapezoid points per Cauchy circle
  QuadratureSettings si = s;
  si.abs_tol = 2e-14;
  si.rel_tol = 1e-13;
  si.max_intervals = std::max(4000, s.max_intervals);

  // Derivative coefficients of the continued function at a contour point
  // z0 = 2 tz e^{i theta}, extracted from a circle that stays clear of the
  // branch points 0, 4 and the second-sheet point -4.
  auto circle_coeffs = [&](double theta, std::vector<cplx>& d) {
    const cplx z0 = 2.0 * tz * std::polar(1.0, theta);
    const double rho =
        0.5 * std::min({std::abs(z0), std::abs(z0 - 4.0), std::abs(z0 + 4.0)});
    const bool through = z0.real() < 0.0;
    std::vector<cplx> f(kCircle);
    for (int m = 0; m < kCircle; ++m) {
      const double phi = 2.0 * kPi * m / kCircle;
      const cplx w = z0 + rho * std::polar(1.0, phi);
      f[m] = (w.imag() >= 0.0) ? n0_tilde(w, si)
                               : detail::n0_tilde_ext(w, through, si);
    }
    for (int j = 0; j <= j_max; ++j) {
      cplx acc = 0.0;
      for (int m = 0; m < kCircle; ++m) {
        const double phi = 2.0 * kPi * m * (2 * j) / kCircle;
        acc += f[m] * std::polar(1.0, -phi);
      }
      d[j] = acc / (static_cast<double>(kCircle) * std::pow(rho, 2 * j));
    }
  };

  // Outer integral over the deformed half-circle u = 2 e^{i theta}, with
  // theta = pi sin^2(t) flattening both endpoint weight singularities.
  // Composite fixed panels with node doubling give the error estimate.
  auto sample = [&](double t, std::vector<cplx>& v) {
    const double theta = kPi * std::sin(t) * std::sin(t);
    const double jac = kPi * std::sin(2.0 * t);
    std::vector<cplx> d(j_max + 1);
    circle_coeffs(theta, d);
    const cplx phase = std::polar(1.0, theta) *
                       std::polar(1.0, -0.5 * (theta - kHalfPi)) /
                       std::sqrt(8.0 * std::sin(theta));
    const cplx w = cplx(0.0, -2.0 / kPi) * phase * jac;
    for (int j = 0; j <= j_max; ++j) v[j] = d[j] * w;
  };

  // 15-point Gauss-Kronrod abscissas reused as a fixed rule per panel.
  static const double kX[8] = {
      0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
      0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
  static const double kW[8] = {
      0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
      0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};

  std::vector<cplx> prev, cur;
  std::vector<cplx> v(j_max + 1);
  for (int panels = 4; panels <= 256; panels *= 2) {
    cur.assign(j_max + 1, 0.0);
    const double h = kHalfPi / panels;
    for (int p = 0; p < panels; ++p) {
      const double c = (p + 0.5) * h;
      for (int q = 0; q < 8; ++q) {
        const double wq = kW[q] * 0.5 * h;
        sample(c + 0.5 * h * kX[q], v);
        for (int j = 0; j <= j_max; ++j) cur[j] += wq * v[j];
        if (kX[q] != 0.0) {
          sample(c - 0.5 * h * kX[q], v);
          for (int j = 0; j <= j_max; ++j) cur[j] += wq * v[j];
        }
      }
    }
    if (!prev.empty()) {
      double err = 0.0;
      for (int j = 0; j <= j_max; ++j) {
        err = std::max(err, std::abs(cur[j] - prev[j]) /
                                std::max(1.0, std::abs(cur[j])));
      }
      if (err < 1e-11) break;
      if (panels == 256) {
        throw ConvergenceError("n_tz_taylor: contour integral did not settle");
      }
    }
    prev = cur;
  }

  std::vector<double> c(2 * j_max + 1, 0.0);
  for (int j = 0; j <= j_max; ++j) c[2 * j] = cur[j].real();
  return c;
}

DosInterpolant build_interpolant(double tz, int n_nodes, const QuadratureSettings& s) {
  check_tz_open(tz, "build_interpolant");
  if (n_nodes < 64) throw std::domain_error("build_interpolant: n_nodes must be >= 64");

  QuadratureSettings sq = s;
  sq.abs_tol = std::max(s.abs_tol, 5e-12);
  sq.rel_tol = std::max(s.rel_tol, 5e-12);

  const double per_panel_tol = 4e-9;
  const int max_depth = 46;

  DosInterpolant out;
  double sup = 0.0;

  // Error-driven bisection: fit, validate against quadrature on a 3x
  // oversampled grid, split while the fit misses the target.
  auto fit = [&](auto&& self, double a, double b, int depth) -> void {
    std::vector<double> vals(n_nodes);
    for (int j = 0; j < n_nodes; ++j) {
      vals[j] = n_tz(ChebPanel::node(a, b, n_nodes, j), tz, sq);
    }
    ChebPanel panel(a, b, std::move(vals));
    double err = 0.0;
    const int nv = 3 * n_nodes;
    for (int i = 0; i < nv; ++i) {
      const double x = a + (b - a) * (i + 0.5) / nv;
      err = std::max(err, std::abs(panel.eval(x) - n_tz(x, tz, sq)));
    }
    if (err > per_panel_tol && depth < max_depth) {
      const double m = 0.5 * (a + b);
      self(self, a, m, depth + 1);
      self(self, m, b, depth + 1);
      return;
    }
    sup = std::max(sup, err);
    out.poly.add(std::move(panel));
  };

  double lo = 0.0;
  for (double k : band_kinks(tz)) {
    fit(fit, lo, k, 0);
    lo = k;
  }

  out.sup_error = sup;
  if (sup > 1e-8) {
    throw ConvergenceError(
        "build_interpolant: validated error " + std::to_string(sup) +
        " exceeds 1e-8; rerun with more nodes per panel");
  }
  return out;
}

DosEvaluator::DosEvaluator(double tz, QuadratureSettings s) : tz_(tz), quad_(s) {
  if (!(tz >= 0.0 && tz < 2.0)) {
    throw std::domain_error("DosEvaluator: tz must lie in [0, 2)");
  }
  if (tz_ > 0.0) at_zero_ = n_tz(0.0, tz_, quad_);
}

double DosEvaluator::value(double eps) const {
  if (tz_ == 0.0) return std::abs(eps) >= 4.0 ? 0.0 : detail::n0_fast(eps);
  eps = std::abs(eps);
  if (eps >= band_edge()) return 0.0;
  if (interp_) return interp_->poly.eval(eps);
  return n_tz(eps, tz_, quad_);
}

double DosEvaluator::direct(double eps) const {
  if (tz_ == 0.0) return std::abs(eps) >= 4.0 ? 0.0 : n0(eps, quad_);
  return n_tz(eps, tz_, quad_);
}

double DosEvaluator::at_zero() const {
  if (tz_ == 0.0) {
    throw std::domain_error("DosEvaluator: band-center value diverges at tz = 0");
  }
  return at_zero_;
}

void DosEvaluator::build_interpolant(int n_nodes) {
  interp_ = neel::build_interpolant(tz_, n_nodes, quad_);
}

double DosEvaluator::interpolant_sup_error() const {
  if (!interp_) throw std::logic_error("DosEvaluator: no interpolant built");
  return interp_->sup_error;
}

}  // namespace neel
