#pragma once

#include <map>

#include "neel/dos.hpp"
#include "neel/quadrature.hpp"

namespace neel {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Cache of the slow named constants, filled on first use. b0 is keyed by tz.
struct NamedConstants {
  Estimate a0;
  Estimate a1;
  std::map<double, Estimate> b0;
  bool have_a0 = false;
  bool have_a1 = false;
};

// Log-difference moment of the square-lattice density of states over the
// band, computed from a small-argument series segment plus direct panels.
Estimate const_a0_estimate(const QuadratureSettings& s = {});
double const_a0();

// Combination of const_a0, the squared-log sech^2 moment, and closed
// constants that fixes the subleading exponent of the isotropic ordering
// temperature.
Estimate const_a1_estimate(const QuadratureSettings& s = {});
double const_a1();

// Log-difference moment of the anisotropic density of states over its band.
Estimate const_b0_estimate(double tz, const DosEvaluator& dos,
                           const QuadratureSettings& s = {});
double const_b0(double tz, const DosEvaluator& dos);

// Read-only view of what has been computed so far.
NamedConstants named_constants_snapshot();

}  // namespace neel
