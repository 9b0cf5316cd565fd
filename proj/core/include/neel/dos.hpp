#pragma once

// Density of states for the square lattice band and its anisotropic 3D
// extension, together with the analytic continuation machinery used to
// extract Taylor coefficients at the band center.

#include <complex>
#include <optional>
#include <vector>

#include "neel/chebyshev.hpp"
#include "neel/quadrature.hpp"

namespace neel {

// In-plane density of states. Even in eps, logarithmically divergent at 0,
// zero for |eps| >= 4 with a jump at the band edge. eps == 0 throws.
double n0(double eps, const QuadratureSettings& s = {});

// Analytic continuation of n0 off the band interval. Defined for im(z) >= 0
// with z not in {0} u [4, inf); im(z) == 0 with re(z) in (-4, 0) yields the
// boundary value from above, whose real part reproduces n0(-re(z)).
std::complex<double> n0_tilde(std::complex<double> z, const QuadratureSettings& s = {});

// 3D density of states at interlayer hopping tz in (0, 2). Even in eps,
// zero for |eps| >= 4 + 2 tz, finite everywhere on the band. tz == 0 is
// rejected; that case is n0.
double n_tz(double eps, double tz, const QuadratureSettings& s = {});

// Taylor coefficients of n_tz around eps = 0: returns c[0..2*j_max] with
// n_tz(eps) = sum_k c[k] eps^k near 0. Odd entries are exactly zero.
// Computed from Cauchy integrals on a deformed contour, so it needs the
// analyticity window: tz in [0.05, 1.95], j_max <= 8.
std::vector<double> n_tz_taylor(double tz, int j_max, const QuadratureSettings& s = {});

struct DosInterpolant {
  PiecewisePoly poly;      // covers [0, 4 + 2 tz]
  double sup_error = 0.0;  // max |poly - quadrature| on the validation grid
};

// Piecewise Chebyshev fit of n_tz(., tz) with panel boundaries at the
// kink locations {2 tz, 4 - 2 tz, 4 + 2 tz} and error-driven bisection
// toward the kinks. Validated on a 3x oversampled grid; throws
// ConvergenceError when the recorded sup error exceeds 1e-8.
DosInterpolant build_interpolant(double tz, int n_nodes = 64,
                                 const QuadratureSettings& s = {});

// Bundles a hopping value, quadrature settings and an optional cached
// interpolant behind a single evaluation interface.
class DosEvaluator {
 public:
  explicit DosEvaluator(double tz, QuadratureSettings s = {});

  double tz() const { return tz_; }
  double band_edge() const { return tz_ == 0.0 ? 4.0 : 4.0 + 2.0 * tz_; }
  const QuadratureSettings& settings() const { return quad_; }

  // Interpolant when built, otherwise the validated fast path (tz == 0)
  // or direct quadrature.
  double value(double eps) const;

  // Direct quadrature, bypassing any cache. Source of truth.
  double direct(double eps) const;

  // n_tz(0); throws for tz == 0 where the value diverges.
  double at_zero() const;

  void build_interpolant(int n_nodes = 64);
  bool has_interpolant() const { return interp_.has_value(); }
  double interpolant_sup_error() const;

 private:
  double tz_;
  QuadratureSettings quad_;
  std::optional<DosInterpolant> interp_;
  double at_zero_ = 0.0;  // cached in the constructor for tz > 0
};

namespace detail {

// Fast n0 built from the band-center log split n0 = P(eps) ln(16/eps) + Q(eps)
// with P evaluated through an arithmetic-geometric mean and Q fitted once
// from direct quadrature. Validated against n0 in the test suite.
double n0_fast(double eps);

// Continuation evaluator for contour work. im(z) >= 0 delegates to the
// principal branch; im(z) < 0 evaluates either the principal formula
// (valid when the path from the upper half-plane crossed (0, 4)) or, when
// through_negative_cut is set, the second sheet reached through (-4, 0).
std::complex<double> n0_tilde_ext(std::complex<double> z, bool through_negative_cut,
                                  const QuadratureSettings& s);

}  // namespace detail

}  // namespace neel
