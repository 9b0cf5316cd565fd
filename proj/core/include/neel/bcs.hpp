#pragma once

#include <vector>

#include "neel/dos.hpp"
#include "neel/quadrature.hpp"

namespace neel {

// Universal gap-ratio curve and its derivative, tabulated once on a
// Chebyshev-Lobatto grid over [0, y_max] and evaluated barycentrically.
struct BcsCurve {
  std::vector<double> nodes;
  std::vector<double> f_values;
  std::vector<double> fprime_values;
  double interp_error = 0.0;  // sup against direct solves on a 3x grid
  double y_max = 0.95;

  double f(double y) const;
  double fprime(double y) const;
};

// Log-kernel moment of sech^2; decreasing with H(a) -> 0 as a -> infinity
// and H(a) ~ ln(1/a) as a -> 0.
double h_fn(double a, const QuadratureSettings& s = {});

// Derivative of h_fn, by differentiating under the integral sign.
double h_fn_prime(double a, const QuadratureSettings& s = {});

// Difference integral J(x, y); strictly decreasing in x with limit
// ln(2/y) at x = 0. tanh(./y) = 1 by convention at y = 0.
double j_fn(double x, double y, const QuadratureSettings& s = {});

// Closed form ln(pi) - gamma - H(x/(2y)) - ln x of the same function.
double j_closed(double x, double y, const QuadratureSettings& s = {});

// Root of J(., y) = 0 on [1e-6, 4]; pi e^{-gamma} exactly at y = 0.
double f_bcs(double y, const QuadratureSettings& s = {});

// Implicit derivative -J_y/J_x at x = f_bcs(y); zero at y = 0 where the
// y-dependence is exponentially flat.
double f_bcs_prime(double y, const QuadratureSettings& s = {});

BcsCurve build_bcs_curve(int n_nodes = 97, double y_max = 0.95,
                         const QuadratureSettings& s = {});

// Log-weighted moment of the tanh-difference kernel at x = f(y), scaled by
// the prefactor f(y) - y f'(y).
double c1_fn(double y, const BcsCurve& curve, const QuadratureSettings& s = {});

// Subleading correction: density-contrast moment of the same kernel, with
// energies measured in units of the ordering temperature t_n.
double g_fn(double u, double tz, double y, double t_n, const DosEvaluator& dos,
            const BcsCurve& curve, const QuadratureSettings& s = {});

}  // namespace neel
