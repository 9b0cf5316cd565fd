#pragma once

#include "neel/dos.hpp"
#include "neel/quadrature.hpp"

namespace neel {

struct GapSolution {
  double u = 0.0;
  double tz = 0.0;
  double t = 0.0;
  double delta_af = 0.0;  // ordering gap, in [0, u/2)
  double m_af = 0.0;      // 2 delta_af / u
  double m_hat = 0.0;     // delta_af / t_n_used
  double residual = 0.0;  // |1/u - f_big_t(delta_af)|
  double t_n_used = 0.0;
};

// Mean-field kernel integral over the band. T below 1e-12 is treated as
// exactly zero, where tanh = 1 by convention. Diverges logarithmically at
// delta = t = 0, which is rejected.
double f_big_t(double delta, double t, const DosEvaluator& dos,
               const QuadratureSettings& s = {});

// Unique root of f_big_t(delta) = 1/u in (0, u/2) for t below t_n; zero gap
// at or above t_n. t_n comes from the ordering-temperature solver so that
// temperature sweeps reuse one value.
GapSolution solve_gap(double u, double tz, double t, double t_n,
                      const DosEvaluator& dos, const QuadratureSettings& s = {});

// Grand potential difference functional whose minimizer certifies the gap.
double free_energy(double delta, double u, double tz, double t,
                   const DosEvaluator& dos, const QuadratureSettings& s = {});

// Gap measured in units of the ordering temperature.
double m_hat(double u, double tz, double t, double t_n, const DosEvaluator& dos,
             const QuadratureSettings& s = {});

}  // namespace neel
