#include "neel/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace neel {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_positive(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (x >= 0.5) return gamma_positive(x);
  if (x == std::floor(x)) throw std::domain_error("gamma_fn: pole at nonpositive integer");
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
}

double digamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("digamma_fn: pole at nonpositive integer");
  double result = 0.0;
  if (x < 0.5) {
    // psi(x) = psi(1-x) - pi cot(pi x)
    result -= kPi / std::tan(kPi * x);
    x = 1.0 - x;
  }
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // asymptotic series through x^{-14}
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12 +
                    inv2 * (-1.0 / 120 +
                            inv2 * (1.0 / 252 +
                                    inv2 * (-1.0 / 240 +
                                            inv2 * (1.0 / 132 +
                                                    inv2 * (-691.0 / 32760 +
                                                            inv2 * (1.0 / 12)))))));
  return result;
}

}  // namespace neel
