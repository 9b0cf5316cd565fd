#pragma once

#include "neel/dos.hpp"
#include "neel/quadrature.hpp"

namespace neel {

struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct NeelResult {
  double u = 0.0;
  double tz = 0.0;
  double t_n = 0.0;        // ordering temperature, positive
  RootBracket bracket;     // bracket handed to the root finder
  double residual = 0.0;   // |1/u - f_tz(t_n)|
};

// Susceptibility-style integral whose root in T defines the ordering
// temperature; strictly decreasing in T and bounded by 1/(2T).
double f_tz(double t, const DosEvaluator& dos, const QuadratureSettings& s = {});

// Solves f_tz(T) = 1/u. Couplings small enough that T_N would underflow
// double-precision quadrature are rejected with the guard named in the
// message: u >= 0.3 for tz = 0, u >= 1/(25 N(0)) otherwise.
NeelResult solve_neel(double u, double tz, const DosEvaluator& dos,
                      const QuadratureSettings& s = {});

}  // namespace neel
