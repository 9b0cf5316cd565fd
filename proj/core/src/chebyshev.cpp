#include "neel/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace neel {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

ChebPanel::ChebPanel(double a, double b, std::vector<double> values)
    : a_(a), b_(b), vals_(std::move(values)) {
  if (!(a < b)) throw std::domain_error("ChebPanel: empty interval");
  if (vals_.size() < 2) throw std::domain_error("ChebPanel: need >= 2 values");
}

double ChebPanel::node(double a, double b, int n, int j) {
  // increasing order: cos runs from pi down to 0
  const double t = std::cos(kPi * (n - 1 - j) / (n - 1));
  return 0.5 * (a + b) + 0.5 * (b - a) * t;
}

double ChebPanel::eval(double x) const {
  const int n = static_cast<int>(vals_.size());
  // barycentric weights (-1)^j, halved at the two ends; the increasing
  // node order only flips the overall sign, which cancels in the ratio
  double num = 0.0, den = 0.0;
  for (int j = 0; j < n; ++j) {
    const double xj = node(a_, b_, n, j);
    double diff = x - xj;
    if (std::abs(diff) < 1e-300) return vals_[j];
    double w = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == n - 1) w *= 0.5;
    const double q = w / diff;
    num += q * vals_[j];
    den += q;
  }
  return num / den;
}

void PiecewisePoly::add(ChebPanel p) {
  if (!panels_.empty() && std::abs(p.lo() - panels_.back().hi()) >
                              1e-12 * (std::abs(p.lo()) + 1.0))
    throw std::domain_error("PiecewisePoly: panels must be contiguous");
  edges_.push_back(p.hi());
  panels_.push_back(std::move(p));
}

double PiecewisePoly::lo() const {
  if (panels_.empty()) throw std::domain_error("PiecewisePoly: empty");
  return panels_.front().lo();
}

double PiecewisePoly::hi() const {
  if (panels_.empty()) throw std::domain_error("PiecewisePoly: empty");
  return panels_.back().hi();
}

double PiecewisePoly::eval(double x) const {
  if (panels_.empty()) throw std::domain_error("PiecewisePoly: empty");
  if (x < lo() || x > hi()) throw std::domain_error("PiecewisePoly: x outside range");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), x);
  if (it == edges_.end()) --it;
  return panels_[static_cast<std::size_t>(it - edges_.begin())].eval(x);
}

}  // namespace neel
