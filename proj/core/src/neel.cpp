#include "neel/neel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "neel/errors.hpp"
#include "neel/roots.hpp"

namespace neel {

double f_tz(double t, const DosEvaluator& dos, const QuadratureSettings& s) {
  if (!(t > 0.0)) throw std::domain_error("f_tz: t must be positive");
  const double tz = dos.tz();
  const double e_max = dos.band_edge();
  auto f = [&dos, t](double e) {
    return dos.value(e) * std::tanh(e / (2.0 * t)) / e;
  };
  // Below 10 T the kernel is ~ 1/(2T) and above it ~ 1/eps; the exponential
  // panel rides through the crossover at any scale.
  std::vector<double> pts{0.0, std::min(10.0 * t, e_max)};
  for (double k : {2.0 * tz, 4.0 - 2.0 * tz}) {
    if (tz > 0.0 && k > pts[1] + 1e-12 && k < e_max - 1e-12) pts.push_back(k);
  }
  if (pts[1] < e_max) pts.push_back(e_max);
  std::sort(pts.begin(), pts.end());

  QuadratureSettings si = s;
  si.abs_tol = s.abs_tol / static_cast<double>(pts.size());
  si.rel_tol = 0.5 * s.rel_tol;
  double total = integrate_log0(f, pts[1], si).value;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    total += integrate(f, pts[i], pts[i + 1], si).value;
  }
  return total;
}

NeelResult solve_neel(double u, double tz, const DosEvaluator& dos,
                      const QuadratureSettings& s) {
  if (!(u > 0.0)) throw std::domain_error("solve_neel: u must be positive");
  if (dos.tz() != tz) {
    throw std::domain_error("solve_neel: evaluator was built for a different tz");
  }
  if (tz == 0.0) {
    if (u < 0.3) {
      throw std::domain_error(
          "solve_neel: u below the tz = 0 underflow guard u >= 0.3");
    }
  } else {
    const double guard = 1.0 / (25.0 * dos.at_zero());
    if (u < guard) {
      throw std::domain_error(
          "solve_neel: u below the underflow guard u >= 1/(25 N(0))");
    }
  }

  auto g = [&](double t) { return f_tz(t, dos, s) - 1.0 / u; };

  // The bound f_tz(T) <= 1/(2T) makes T = u/2 an upper bracket endpoint.
  double hi = 0.5 * u;
  for (int i = 0; g(hi) >= 0.0; ++i) {
    if (i >= 60) {
      throw ConvergenceError("solve_neel: upper bracket expansion exhausted");
    }
    hi *= 2.0;
  }
  double lo = std::min(0.1, 0.25 * hi);
  for (int i = 0; g(lo) <= 0.0; ++i) {
    if (i >= 100) {
      throw ConvergenceError("solve_neel: lower bracket expansion exhausted");
    }
    lo *= 0.5;
  }

  RootSettings rs;
  rs.x_tol = 1e-15 * std::max(1.0, hi);
  const RootResult r = find_root(g, lo, hi, rs);

  NeelResult out;
  out.u = u;
  out.tz = tz;
  out.t_n = r.x;
  out.bracket = {lo, hi};
  out.residual = std::abs(r.fx);
  if (out.residual >= 1e-9) {
    throw ConvergenceError("solve_neel: residual above 1e-9 after root solve");
  }
  return out;
}

}  // namespace neel
