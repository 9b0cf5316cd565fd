#pragma once

#include <functional>

namespace neel {

struct RootSettings {
  double x_tol = 1e-13;   // absolute half-width of the final bracket
  int max_iter = 200;
};

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Brent's method on a sign-changing bracket [lo, hi]. Throws
// std::domain_error when f(lo) and f(hi) have the same sign and
// ConvergenceError when the iteration budget runs out.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     const RootSettings& s = {});

}  // namespace neel
