#pragma once

// Gamma and digamma for real arguments, sufficient for the series
// coefficient formulas (half-integer and integer arguments, both signs).

namespace neel {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Gamma via a 9-term Lanczos approximation with reflection for x < 1/2.
// Poles at 0, -1, -2, ... raise std::domain_error.
double gamma_fn(double x);

// Digamma via reflection (x < 1/2) and upward recurrence into the
// asymptotic region x >= 10.
double digamma_fn(double x);

}  // namespace neel
