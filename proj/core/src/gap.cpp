#include "neel/gap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "neel/errors.hpp"
#include "neel/roots.hpp"

namespace neel {

namespace {

// Shared panel builder: exponential panel on [0, p1] that resolves every
// layer scale near zero, then plain panels split at the kernel knees and
// the density's kinks.
std::vector<double> band_panels(double tz, double e_max,
                                std::initializer_list<double> knees) {
  double p1 = std::min(1.0, e_max);
  if (tz > 0.0) p1 = std::min(p1, 2.0 * tz);
  std::vector<double> pts{0.0, p1};
  for (double k : {2.0 * tz, 4.0 - 2.0 * tz}) {
    if (tz > 0.0 && k > p1 + 1e-12 && k < e_max - 1e-12) pts.push_back(k);
  }
  for (double k : knees) {
    if (k > p1 + 1e-12 && k < e_max - 1e-12) pts.push_back(k);
  }
  pts.push_back(e_max);
  std::sort(pts.begin(), pts.end());
  return pts;
}

double integrate_band(const RealFn& f, const std::vector<double>& pts,
                      const QuadratureSettings& s) {
  QuadratureSettings si = s;
  si.abs_tol = s.abs_tol / static_cast<double>(pts.size());
  si.rel_tol = 0.5 * s.rel_tol;
  double total = integrate_log0(f, pts[1], si).value;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    total += integrate(f, pts[i], pts[i + 1], si).value;
  }
  return total;
}

// ln(2 cosh z) for z >= 0 without overflowing cosh.
double log_2cosh(double z) { return z + std::log1p(std::exp(-2.0 * z)); }

}  // namespace

double f_big_t(double delta, double t, const DosEvaluator& dos,
               const QuadratureSettings& s) {
  if (delta < 0.0 || t < 0.0) {
    throw std::domain_error("f_big_t: delta and t must be nonnegative");
  }
  if (t < 1e-12) t = 0.0;
  if (delta == 0.0 && t == 0.0) {
    throw std::domain_error(
        "f_big_t: integrand is ~ N(eps)/eps at delta = t = 0, not integrable");
  }
  const double e_max = dos.band_edge();
  auto f = [&dos, delta, t](double e) {
    const double q = std::hypot(delta, e);
    const double th = t == 0.0 ? 1.0 : std::tanh(q / (2.0 * t));
    return dos.value(e) * th / q;
  };
  return integrate_band(f, band_panels(dos.tz(), e_max, {delta, 2.0 * t}), s);
}

GapSolution solve_gap(double u, double tz, double t, double t_n,
                      const DosEvaluator& dos, const QuadratureSettings& s) {
  if (!(u > 0.0)) throw std::domain_error("solve_gap: u must be positive");
  if (dos.tz() != tz) {
    throw std::domain_error("solve_gap: evaluator was built for a different tz");
  }
  if (t < 0.0) throw std::domain_error("solve_gap: t must be nonnegative");
  if (t < 1e-12) t = 0.0;

  GapSolution out;
  out.u = u;
  out.tz = tz;
  out.t = t;
  out.t_n_used = t_n;
  if (t >= t_n) {
    out.delta_af = 0.0;
    out.m_af = 0.0;
    out.m_hat = 0.0;
    out.residual = std::abs(1.0 / u - f_big_t(0.0, t, dos, s));
    return out;
  }

  const double lo = 1e-14;
  const double hi = 0.5 * u * (1.0 - 1e-12);
  auto g = [&](double delta) { return f_big_t(delta, t, dos, s) - 1.0 / u; };
  if (g(lo) < 0.0) {
    throw ConvergenceError(
        "solve_gap: f_big_t(0+) < 1/u although t < t_n; quadrature and the "
        "supplied t_n disagree");
  }
  RootSettings rs;
  rs.x_tol = 1e-13;
  const RootResult r = find_root(g, lo, hi, rs);
  out.delta_af = r.x;
  out.m_af = 2.0 * r.x / u;
  out.m_hat = t_n > 0.0 ? r.x / t_n : 0.0;
  out.residual = std::abs(r.fx);
  if (out.residual >= 1e-10) {
    throw ConvergenceError("solve_gap: residual above 1e-10 after root solve");
  }
  return out;
}

double free_energy(double delta, double u, double tz, double t,
                   const DosEvaluator& dos, const QuadratureSettings& s) {
  if (delta < 0.0) throw std::domain_error("free_energy: delta must be >= 0");
  if (!(u > 0.0)) throw std::domain_error("free_energy: u must be positive");
  if (dos.tz() != tz) {
    throw std::domain_error(
        "free_energy: evaluator was built for a different tz");
  }
  if (t < 1e-12) t = 0.0;
  const double e_max = dos.band_edge();
  RealFn f;
  double scale;
  if (t == 0.0) {
    f = [&dos, delta](double e) { return dos.value(e) * std::hypot(delta, e); };
    scale = -2.0;
  } else {
    f = [&dos, delta, t](double e) {
      return dos.value(e) * log_2cosh(std::hypot(delta, e) / (2.0 * t));
    };
    scale = -4.0 * t;
  }
  const double body =
      integrate_band(f, band_panels(tz, e_max, {delta, 2.0 * t}), s);
  return scale * body + delta * delta / u;
}

double m_hat(double u, double tz, double t, double t_n, const DosEvaluator& dos,
             const QuadratureSettings& s) {
  if (!(t_n > 0.0)) throw std::domain_error("m_hat: t_n must be positive");
  return solve_gap(u, tz, t, t_n, dos, s).delta_af / t_n;
}

}  // namespace neel
