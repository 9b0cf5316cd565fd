#include "neel/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "neel/errors.hpp"

namespace neel {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     const RootSettings& s) {
  if (!(lo < hi)) throw std::domain_error("find_root: empty bracket");
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if ((fa > 0) == (fb > 0))
    throw std::domain_error("find_root: no sign change over the bracket");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 1; it <= s.max_iter; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a; fc = fa; d = b - a; e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * 2.220446049250313e-16 * std::abs(b) + 0.5 * s.x_tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return {b, fb, it};
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = m; e = m;  // bisection
    } else {
      double p, q;
      const double s1 = fb / fa;
      if (a == c) {
        p = 2.0 * m * s1;
        q = 1.0 - s1;
      } else {
        const double q1 = fa / fc;
        const double r1 = fb / fc;
        p = s1 * (2.0 * m * q1 * (q1 - r1) - (b - a) * (r1 - 1.0));
        q = (q1 - 1.0) * (r1 - 1.0) * (s1 - 1.0);
      }
      if (p > 0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d; d = p / q;  // accept interpolation
      } else {
        d = m; e = m;
      }
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0 ? tol : -tol);
    fb = f(b);
  }
  std::ostringstream os;
  os << "find_root: no convergence in " << s.max_iter << " iterations on [" << lo
     << ", " << hi << "]";
  throw ConvergenceError(os.str());
}

}  // namespace neel
