#pragma once

#include "neel/bcs.hpp"
#include "neel/dos.hpp"
#include "neel/named_constants.hpp"
#include "neel/quadrature.hpp"
#include "neel/series.hpp"

namespace neel {

// Closed-form ordering-temperature asymptote at tz = 0:
//   (32 / (pi e^{-gamma})) exp(-sqrt(4 pi^2 / u + a1)).
double tn_asym_2d(double u);

// Closed-form asymptote for tz > 0, with the density at zero energy and
// b0(tz) taken from the supplied evaluator:
//   ((8 + 4 tz) / (pi e^{-gamma})) exp(-(1/u - b0) / n(0)).
double tn_asym_3d(double u, double tz, const DosEvaluator& dos);

// Gap-to-temperature ratio through the square-root correction:
//   f(y) + c1(y) sqrt(u).  u = 0 returns f(y) exactly.
double mhat_asym_2d(double u, double y, const BcsCurve& curve,
                    const QuadratureSettings& s = {});

// Ratio for tz > 0: f(y) alone, or f(y) + g(u, tz, y) when include_g is
// set (t_n must then be the ordering temperature for (u, tz)).
double mhat_asym_3d(double u, double tz, double y, bool include_g, double t_n,
                    const DosEvaluator& dos, const BcsCurve& curve,
                    const QuadratureSettings& s = {});

}  // namespace neel
