#pragma once

// Globally adaptive Gauss-Kronrod 15(7) quadrature plus the endpoint
// substitutions used throughout the library. The adaptive loop always
// bisects the interval with the largest error estimate; integrands are
// never evaluated at interval endpoints, so open-endpoint singularities
// are tolerated as long as they are integrable.

#include <complex>
#include <functional>
#include <vector>

namespace neel {

struct QuadratureSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated estimate, not a rigorous bound
  int intervals = 0;
};

struct ComplexQuadratureResult {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
  int intervals = 0;
};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

// Plain adaptive integration of f over [a, b].
QuadratureResult integrate(const RealFn& f, double a, double b,
                           const QuadratureSettings& s = {});

// Same loop for a complex-valued integrand of a real variable.
ComplexQuadratureResult integrate_complex(const ComplexFn& f, double a, double b,
                                          const QuadratureSettings& s = {});

// Integration with the substitution x = a + (b-a) sin^2(t). Both endpoint
// Jacobian zeros are quadratic, which regularizes inverse-square-root
// singularities at either end of [a, b].
QuadratureResult integrate_sqrt(const RealFn& f, double a, double b,
                                const QuadratureSettings& s = {});
ComplexQuadratureResult integrate_sqrt_complex(const ComplexFn& f, double a, double b,
                                               const QuadratureSettings& s = {});

// Integration of f over (0, b] with the substitution x = b e^{-t}, for
// integrands with a logarithmic blow-up at 0. The t-range is truncated
// once b e^{-t} falls below the absolute tolerance scale.
QuadratureResult integrate_log0(const RealFn& f, double b,
                                const QuadratureSettings& s = {});

// Sum of integrate() over consecutive panels [pts[0], pts[1]], ...
QuadratureResult integrate_panels(const RealFn& f, const std::vector<double>& pts,
                                  const QuadratureSettings& s = {});

}  // namespace neel
