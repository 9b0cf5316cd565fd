#pragma once

#include <memory>
#include <vector>

namespace neel {

enum class SeriesMode { kPrinted, kAssembled };

// Small-argument expansion collected order by order: value at eps is
// sum_n eps^n (c[n] + d[n] * ln(16/eps)), n <= order.
struct SeriesTable {
  int order = 0;
  std::vector<double> c;
  std::vector<double> d;
};

struct SeriesSpec {
  int k_max = 5;
  int l_max = 5;
  // Built on first assembled-mode use; copies of the spec share it.
  mutable std::shared_ptr<const SeriesTable> assembled;
};

// One term of the double-sum expansion of the square-lattice density of
// states, on the real branch w1 < 0 < 1 < w2 where both logs are real.
double a_kl(int k, int l, double w1, double w2);

// Table of the expansion collected through eps^order. Orders above
// k_max + l_max would be incomplete, so that sum is the ceiling.
SeriesTable assemble_series_table(int order);

// Small-eps expansion of the square-lattice density of states, either the
// fixed degree-10 polynomial (printed) or the table built from the double
// sum truncated per spec (assembled). The two agree to rounding.
double n0_series(double eps, const SeriesSpec& spec = {},
                 SeriesMode mode = SeriesMode::kPrinted);

// Small-tz expansion of the anisotropic density of states at zero energy,
// keeping terms with power <= order (order <= 10).
double n_tz0_series(double tz, int order = 10);

}  // namespace neel
