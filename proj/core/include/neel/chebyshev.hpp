#pragma once

// Barycentric Chebyshev-Lobatto interpolation, plus a piecewise container
// with binary-search panel dispatch. Used for cached density-of-states
// evaluators and the BCS prefactor curve.

#include <vector>

namespace neel {

class ChebPanel {
 public:
  // values[j] = f(node(a, b, n, j)), j = 0..n-1.
  ChebPanel(double a, double b, std::vector<double> values);

  double lo() const { return a_; }
  double hi() const { return b_; }
  int size() const { return static_cast<int>(vals_.size()); }

  // Lobatto nodes in increasing order; node 0 is a, node n-1 is b.
  static double node(double a, double b, int n, int j);

  double eval(double x) const;

 private:
  double a_, b_;
  std::vector<double> vals_;
};

class PiecewisePoly {
 public:
  // Panels must be contiguous and added left to right.
  void add(ChebPanel p);

  bool empty() const { return panels_.empty(); }
  double lo() const;
  double hi() const;
  std::size_t panel_count() const { return panels_.size(); }

  double eval(double x) const;  // throws std::domain_error outside [lo, hi]

 private:
  std::vector<ChebPanel> panels_;
  std::vector<double> edges_;
};

}  // namespace neel
