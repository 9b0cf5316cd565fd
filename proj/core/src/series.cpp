#include "neel/series.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "neel/special_functions.hpp"

namespace neel {

namespace {

constexpr double kPiSq = 9.869604401089358;

// Truncated product of dense polynomial coefficients, degree cap n_max.
std::vector<double> poly_mul(const std::vector<double>& a,
                             const std::vector<double>& b, int n_max) {
  std::vector<double> out(n_max + 1, 0.0);
  for (int i = 0; i <= n_max; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; i + j <= n_max; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

double gfactor(int k, int l) {
  return gamma_fn(k + 0.5) * gamma_fn(k + l + 1.0) /
         (gamma_fn(k + 1.0) * gamma_fn(k + 1.0) * gamma_fn(0.5 - l) *
          gamma_fn(l + 1.0) * gamma_fn(l + 1.0));
}

double psi_sum(int k, int l) {
  return 2.0 * (digamma_fn(k + l + 1.0) - digamma_fn(k + 1.0) -
                digamma_fn(l + 1.0)) +
         digamma_fn(k + 0.5) + digamma_fn(0.5 - l);
}

}  // namespace

double a_kl(int k, int l, double w1, double w2) {
  if (k < 0 || l < 0) throw std::domain_error("a_kl: negative index");
  if (!(w1 < 0.0) || !(w2 > 1.0)) {
    throw std::domain_error("a_kl: requires w1 < 0 and w2 > 1");
  }
  const double bracket = std::log(-w1) + std::log(w2 - 1.0) + psi_sum(k, l);
  return std::pow(w1, k) * std::pow(w2 - 1.0, l) * gfactor(k, l) * bracket;
}

SeriesTable assemble_series_table(int order) {
  if (order < 0) throw std::domain_error("assemble_series_table: order < 0");
  const int n = order;

  // Everything is expanded in q = eps/4 with the symbol L = ln(16/eps)
  // carried separately. Both arguments of the double sum collapse to the
  // same ratio r = q/(1-q), so each term is
  //   (-1)^k r^(k+l) * G * (2 ln r + Psi),  ln r = ln 4 - L + sum q^j/j,
  // and the overall prefactor is -(1/(4 pi^2)) * 1/(1-q). A pair (k,l)
  // first contributes at order k+l, so keeping all pairs with k+l <= order
  // makes every kept order complete; truncating the raw double sum at a
  // rectangle instead would leave the top orders missing contributions.
  std::vector<double> r_series(n + 1, 1.0);
  r_series[0] = 0.0;
  std::vector<double> lnr_plain(n + 1, 0.0);
  lnr_plain[0] = std::log(4.0);
  for (int j = 1; j <= n; ++j) lnr_plain[j] = 1.0 / j;

  std::vector<double> sum_plain(n + 1, 0.0), sum_log(n + 1, 0.0);
  std::vector<double> r_pow(n + 1, 0.0);
  r_pow[0] = 1.0;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) r_pow = poly_mul(r_pow, r_series, n);
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      const double g = ((k % 2 == 0) ? 1.0 : -1.0) * gfactor(k, l);
      const double base = 2.0 * lnr_plain[0] + psi_sum(k, l);
      for (int j = m; j <= n; ++j) {
        double plain = base * r_pow[j];
        for (int i = 1; i + m <= j; ++i) {
          plain += 2.0 * lnr_plain[i] * r_pow[j - i];
        }
        sum_plain[j] += g * plain;
        sum_log[j] += g * (-2.0) * r_pow[j];
      }
    }
  }

  SeriesTable t;
  t.order = n;
  t.c.assign(n + 1, 0.0);
  t.d.assign(n + 1, 0.0);
  double scale = -1.0 / (4.0 * kPiSq);  // prefactor at q^0, then 1/4^n per order
  for (int j = 0; j <= n; ++j) {
    double cj = 0.0, dj = 0.0;
    for (int i = 0; i <= j; ++i) {
      cj += sum_plain[i];
      dj += sum_log[i];
    }
    t.c[j] = scale * cj;
    t.d[j] = scale * dj;
    scale *= 0.25;
  }
  return t;
}

double n0_series(double eps, const SeriesSpec& spec, SeriesMode mode) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::domain_error("n0_series: eps must lie in (0, 1]");
  }
  const double big_l = std::log(16.0 / eps);
  if (mode == SeriesMode::kPrinted) {
    const double e2 = eps * eps;
    double acc = big_l / (2.0 * kPiSq);
    acc += e2 * (big_l - 1.0) / (128.0 * kPiSq);
    acc += 3.0 * e2 * e2 * (6.0 * big_l - 7.0) / (65536.0 * kPiSq);
    acc += (5.0 / 3.0) * e2 * e2 * e2 * (30.0 * big_l - 37.0) /
           (4194304.0 * kPiSq);
    acc += (35.0 / 3.0) * e2 * e2 * e2 * e2 * (420.0 * big_l - 533.0) /
           (8589934592.0 * kPiSq);
    acc += (63.0 / 5.0) * e2 * e2 * e2 * e2 * e2 * (1260.0 * big_l - 1627.0) /
           (549755813888.0 * kPiSq);
    return acc;
  }
  if (spec.k_max < 0 || spec.l_max < 0) {
    throw std::domain_error("n0_series: negative truncation order");
  }
  std::shared_ptr<const SeriesTable> table = spec.assembled;
  if (!table || table->order != spec.k_max + spec.l_max) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    table = spec.assembled;
    if (!table || table->order != spec.k_max + spec.l_max) {
      table = std::make_shared<const SeriesTable>(
          assemble_series_table(spec.k_max + spec.l_max));
      spec.assembled = table;
    }
  }
  double acc = 0.0;
  for (int j = table->order; j >= 0; --j) {
    acc = acc * eps + (table->c[j] + table->d[j] * big_l);
  }
  return acc;
}

double n_tz0_series(double tz, int order) {
  if (!(tz > 0.0 && tz <= 1.0)) {
    throw std::domain_error("n_tz0_series: tz must lie in (0, 1]");
  }
  if (order < 0 || order > 10) {
    throw std::domain_error("n_tz0_series: order must lie in [0, 10]");
  }
  const double big_l = std::log(16.0 / tz);
  const double z2 = tz * tz;
  double acc = big_l / (2.0 * kPiSq);
  if (order >= 2) acc += z2 * (2.0 * big_l - 3.0) / (128.0 * kPiSq);
  if (order >= 4) {
    acc += 27.0 * z2 * z2 * (4.0 * big_l - 7.0) / (65536.0 * kPiSq);
  }
  if (order >= 6) {
    acc += 25.0 * z2 * z2 * z2 * (20.0 * big_l - 37.0) / (2097152.0 * kPiSq);
  }
  if (order >= 8) {
    acc += 1225.0 * z2 * z2 * z2 * z2 * (280.0 * big_l - 533.0) /
           (8589934592.0 * kPiSq);
  }
  if (order >= 10) {
    acc += (11907.0 / 5.0) * z2 * z2 * z2 * z2 * z2 *
           (840.0 * big_l - 1627.0) / (274877906944.0 * kPiSq);
  }
  return acc;
}

}  // namespace neel
