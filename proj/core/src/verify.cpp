#include "neel/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "neel/asym.hpp"
#include "neel/bcs.hpp"
#include "neel/dos.hpp"
#include "neel/gap.hpp"
#include "neel/golden.hpp"
#include "neel/named_constants.hpp"
#include "neel/neel.hpp"
#include "neel/quadrature.hpp"
#include "neel/roots.hpp"
#include "neel/series.hpp"
#include "neel/special_functions.hpp"

namespace neel {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPieg = 1.76387698886204569;  // pi e^{-gamma}

void check(VerifyCriterion& c, const std::string& what, double measured,
           double bound) {
  c.subs.push_back({what, measured, bound, measured <= bound});
}

void check_true(VerifyCriterion& c, const std::string& what, bool ok) {
  c.subs.push_back({what, ok ? 0.0 : 1.0, 0.5, ok});
}

struct Fixtures {
  DosEvaluator dos0{0.0};
  DosEvaluator dos05{0.5};
  BcsCurve curve;

  explicit Fixtures(bool full) {
    if (full) dos05.build_interpolant();
    curve = build_bcs_curve();
  }
};

// Midpoint Brillouin-zone sum of phi(|band energy|), quadrant-reduced.
template <typename Phi>
double bz_sum(int l, Phi phi) {
  const int h = l / 2;
  std::vector<double> c(h);
  for (int j = 0; j < h; ++j) c[j] = std::cos((2.0 * j + 1.0) * (kPi / l));
  double acc = 0.0;
  for (int a = 0; a < h; ++a) {
    double row = 0.0;
    for (int b = 0; b < h; ++b) row += phi(std::abs(-2.0 * (c[a] + c[b])));
    acc += row;
  }
  return 4.0 * acc / (2.0 * static_cast<double>(l) * l);
}

double gap_momentum(int l, double u, double t) {
  auto eq = [&](double d) {
    return bz_sum(l, [&](double e) {
             const double q = std::hypot(d, e);
             if (t == 0.0) return 1.0 / q;
             return std::tanh(q / (2.0 * t)) / q;
           }) -
           1.0 / u;
  };
  RootSettings rs;
  rs.x_tol = 1e-14;
  return find_root(eq, 1e-8, 3.9, rs).x;
}

double neel_momentum(int l, double u) {
  auto eq = [&](double t) {
    return bz_sum(l, [&](double e) {
             if (e < 1e-14) return 0.5 / t;
             return std::tanh(e / (2.0 * t)) / e;
           }) -
           1.0 / u;
  };
  RootSettings rs;
  rs.x_tol = 1e-14;
  return find_root(eq, 1e-3, 2.0, rs).x;
}

void criterion_1_constants(VerifyCriterion& c, Fixtures& fx) {
  check(c, "|f_bcs(0) - pi e^-gamma|", std::abs(f_bcs(0.0) - kPieg), 1e-8);
  const double c10 = c1_fn(0.0, fx.curve);
  check(c, "|c1(0) - 0.04576|", std::abs(c10 - 0.04576), 2e-4);
  check(c, "|c1(0)/f(0) - 0.02594|", std::abs(c10 / fx.curve.f(0.0) - 0.02594),
        2e-4);
  check(c, "|a0 - 0.007013|", std::abs(const_a0() - 0.007013), 1e-5);
  check(c, "|a1 - 0.3260|", std::abs(const_a1() - 0.3260), 5e-4);
}

void criterion_2_normalization(VerifyCriterion& c, Fixtures&) {
  QuadratureSettings s;
  s.abs_tol = 1e-11;
  for (double tz : {0.0, 0.2, 0.5, 1.0, 1.5}) {
    auto f = [tz](double e) { return tz == 0.0 ? n0(e) : n_tz(e, tz); };
    double lo;
    std::vector<double> pts;
    if (tz == 0.0) {
      lo = 1.0;
      pts = {1.0, 3.9, 4.0 - 1e-13};
    } else {
      lo = std::min(2.0 * tz, 4.0 - 2.0 * tz) / 2;
      pts = {lo, std::min(2.0 * tz, 4.0 - 2.0 * tz),
             std::max(2.0 * tz, 4.0 - 2.0 * tz), 4.0 + 2.0 * tz - 1e-13};
    }
    const double total =
        integrate_log0(f, lo, s).value + integrate_panels(f, pts, s).value;
    std::ostringstream what;
    what << "|2 int N - 1| at tz=" << tz;
    check(c, what.str(), std::abs(2.0 * total - 1.0), 1e-8);
  }
}

void criterion_3_series(VerifyCriterion& c, Fixtures&) {
  const double lo_ratio = 4096.0 / 3.0;
  const double hi_ratio = 3.0 * 4096.0;
  const double d01 = std::abs(n0_series(0.1) - n0(0.1));
  const double d02 = std::abs(n0_series(0.2) - n0(0.2));
  check(c, "|n0_series - n0| at 0.1", d01, 5e-13);
  const double r0 = d02 / d01;
  check_true(c,
             "n0 remainder ratio 0.2/0.1 in [2^12/3, 3*2^12], measured " +
                 std::to_string(r0),
             r0 >= lo_ratio && r0 <= hi_ratio);
  const double e01 = std::abs(n_tz0_series(0.1) - n_tz(0.0, 0.1));
  const double e02 = std::abs(n_tz0_series(0.2) - n_tz(0.0, 0.2));
  check(c, "|n_tz0_series - n_tz(0)| at 0.1", e01, 5e-12);
  const double r1 = e02 / e01;
  check_true(c,
             "n_tz0 remainder ratio 0.2/0.1 in [2^12/3, 3*2^12], measured " +
                 std::to_string(r1),
             r1 >= lo_ratio && r1 <= hi_ratio);
  c.note =
      "truncation remainders at 0.1 are ~6e-22 (n0) and ~4e-19 (n_tz0), below "
      "double-precision evaluator noise, so the measured differences are noise "
      "and their ratio cannot reproduce the twelfth-power halving law; the "
      "extended-precision companion test demonstrates the law itself";
}

void criterion_4_moments(VerifyCriterion& c, Fixtures&) {
  for (int j = 0; j <= 6; ++j) {
    auto f = [j](double u) { return std::pow(u, j) / std::sqrt(4.0 - u * u); };
    const double lhs = 2.0 / kPi * integrate_sqrt(f, 0.0, 2.0).value;
    const double rhs = std::pow(2.0, j) * gamma_fn((j + 1) / 2.0) /
                       (std::sqrt(kPi) * gamma_fn(j / 2.0 + 1.0));
    check(c, "moment j=" + std::to_string(j) + " |lhs/rhs - 1|",
          std::abs(lhs / rhs - 1.0), 1e-10);
  }
}

void criterion_5_lemmas(VerifyCriterion& c, Fixtures& fx) {
  struct Set {
    const DosEvaluator* dos;
    double t;
  };
  const Set sets[3] = {{&fx.dos0, 0.1}, {&fx.dos05, 0.2}, {&fx.dos05, 0.05}};
  for (const auto& set : sets) {
    bool monotone = true;
    double prev = f_big_t(0.05, set.t, *set.dos);
    for (int i = 1; i < 10; ++i) {
      const double d = 0.05 + 2.0 * i / 9.0;
      const double cur = f_big_t(d, set.t, *set.dos);
      if (!(cur < prev)) monotone = false;
      prev = cur;
    }
    std::ostringstream what;
    what << "F_T decreasing on 10-point grid (tz=" << set.dos->tz()
         << ", T=" << set.t << ")";
    check_true(c, what.str(), monotone);
  }

  const double u = 2.0;
  const auto nr = solve_neel(u, 0.5, fx.dos05);
  double spread = 0.0;
  RootSettings rs;
  rs.x_tol = 1e-12;
  for (int i = 0; i < 16; ++i) {
    const double lo = nr.t_n * (0.30 + 0.02 * i);
    const double hi = nr.t_n * (3.00 - 0.10 * i);
    auto eq = [&](double t) { return f_tz(t, fx.dos05) - 1.0 / u; };
    const double root = find_root(eq, lo, hi, rs).x;
    spread = std::max(spread, std::abs(root - nr.t_n));
  }
  check(c, "T_N spread under 16 bracket perturbations", spread, 1e-9);

  const auto below = solve_gap(u, 0.5, 0.5 * nr.t_n, nr.t_n, fx.dos05);
  check_true(c, "0 < delta_af < u/2 below T_N",
             below.delta_af > 0.0 && below.delta_af < 0.5 * u);
  const auto above = solve_gap(u, 0.5, 1.05 * nr.t_n, nr.t_n, fx.dos05);
  check_true(c, "delta_af = 0 above T_N", above.delta_af == 0.0);

  const auto nr0 = solve_neel(u, 0.0, fx.dos0);
  for (double frac : {0.5, 1.1}) {
    const double t = frac * nr0.t_n;
    int argmin = 0;
    double best = free_energy(0.0, u, 0.0, t, fx.dos0);
    for (int i = 1; i < 20; ++i) {
      const double d = 0.99 * 0.5 * u * i / 19.0;
      const double v = free_energy(d, u, 0.0, t, fx.dos0);
      if (v < best) {
        best = v;
        argmin = i;
      }
    }
    std::ostringstream what;
    what << "free-energy minimizer "
         << (frac < 1.0 ? "interior below" : "at origin above")
         << " T_N (20-point grid)";
    check_true(c, what.str(), frac < 1.0 ? argmin > 0 : argmin == 0);
  }
}

void criterion_6_bcs(VerifyCriterion& c, Fixtures&) {
  double worst = 0.0;
  for (double x : {0.5, 1.0, 2.0}) {
    for (double y : {0.2, 0.5, 0.9}) {
      worst = std::max(worst, std::abs(j_fn(x, y) - j_closed(x, y)));
    }
  }
  check(c, "max |J numeric - J closed| on 3x3 grid", worst, 1e-8);

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> ux(0.3, 2.5);
  std::uniform_real_distribution<double> uy(0.05, 0.6);
  int accepted = 0;
  double worst_fp = 0.0;
  while (accepted < 12) {
    const double x = ux(rng);
    const double y = uy(rng);
    const double scale = std::exp(j_closed(x, y));
    if (scale * y > 0.95) continue;
    ++accepted;
    worst_fp = std::max(worst_fp, std::abs(scale * x - f_bcs(scale * y)));
  }
  check(c, "max fixed-point defect on 12 seeded points", worst_fp, 1e-7);

  double worst_fd = 0.0;
  for (double y : {0.2, 0.5, 0.8}) {
    auto fd = [y](double h) {
      return (f_bcs(y + h) - f_bcs(y - h)) / (2.0 * h);
    };
    const double d = (4.0 * fd(5e-5) - fd(1e-4)) / 3.0;
    worst_fd = std::max(worst_fd, std::abs(d / f_bcs_prime(y) - 1.0));
  }
  check(c, "max rel dev f_bcs' vs Richardson FD", worst_fd, 1e-6);
}

void criterion_7_neel_asym(VerifyCriterion& c, Fixtures& fx) {
  GoldenStore store(GoldenStore::default_dir() + "/asymptotes.csv");

  auto run = [&](const char* name, const std::vector<double>& us,
                 const std::function<double(double)>& ratio_fn,
                 const std::string& params) {
    std::vector<double> dev;
    for (double u : us) dev.push_back(std::abs(ratio_fn(u) - 1.0));
    bool monotone = true;
    for (std::size_t i = 1; i < dev.size(); ++i) {
      if (!(dev[i] < dev[i - 1])) monotone = false;
    }
    check_true(c, std::string(name) + " |ratio-1| strictly decreasing", monotone);
    const double final_dev = dev.back();
    const auto entry = store.record_or_get(name, params, final_dev, 1.25 * final_dev);
    check(c, std::string(name) + " final |ratio-1| vs frozen bound", final_dev,
          entry.tolerance);
  };

  run("tn_asym_2d_ratio", {2.0, 1.0, 0.6, 0.4},
      [&](double u) { return tn_asym_2d(u) / solve_neel(u, 0.0, fx.dos0).t_n; },
      "u=2,1,0.6,0.4;tz=0");
  run("tn_asym_3d_ratio", {2.0, 1.3, 1.0, 0.8},
      [&](double u) {
        return tn_asym_3d(u, 0.5, fx.dos05) / solve_neel(u, 0.5, fx.dos05).t_n;
      },
      "u=2,1.3,1,0.8;tz=0.5");
}

void criterion_8_universality_2d(VerifyCriterion& c, Fixtures& fx) {
  for (double y : {0.0, 0.5}) {
    const double c1 = c1_fn(y, fx.curve);
    const double fy = fx.curve.f(y);
    std::vector<double> dev;
    for (double u : {1.0, 0.6, 0.4}) {
      const double tn = solve_neel(u, 0.0, fx.dos0).t_n;
      const double m = m_hat(u, 0.0, y * tn, tn, fx.dos0);
      dev.push_back(std::abs((m - fy) / std::sqrt(u) / c1 - 1.0));
    }
    std::ostringstream tag;
    tag << "y=" << y;
    check_true(c, "slope/c1 approach monotone at " + tag.str(),
               dev[1] < dev[0] && dev[2] < dev[1]);
    check(c, "final |slope/c1 - 1| at u=0.4, " + tag.str(), dev[2], 0.25);
  }
}

void criterion_9_universality_3d(VerifyCriterion& c, Fixtures& fx) {
  const double tz = 0.5;
  const std::vector<double> us{1.2, 1.0, 0.8};
  for (double y : {0.0, 0.5}) {
    const double fy = fx.curve.f(y);
    std::vector<double> resid, resid_g;
    for (double u : us) {
      const double tn = solve_neel(u, tz, fx.dos05).t_n;
      const double m = m_hat(u, tz, y * tn, tn, fx.dos05);
      resid.push_back(std::abs(m - fy));
      resid_g.push_back(
          std::abs(m - mhat_asym_3d(u, tz, y, true, tn, fx.dos05, fx.curve)));
    }
    std::ostringstream tag;
    tag << "y=" << y;
    for (std::size_t i = 1; i < us.size(); ++i) {
      std::ostringstream what;
      what << "resid(" << us[i] << ")/resid(" << us[i - 1]
           << ") below (u ratio)^3 at " << tag.str();
      check(c, what.str(), resid[i] / resid[i - 1],
            std::pow(us[i] / us[i - 1], 3));
    }
    bool g_helps = true;
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (!(resid_g[i] < resid[i])) g_helps = false;
    }
    check_true(c, "g strictly reduces the residual at each u, " + tag.str(),
               g_helps);
  }
}

void criterion_10_momentum(VerifyCriterion& c, Fixtures& fx) {
  const auto tn2 = solve_neel(2.0, 0.0, fx.dos0);
  const auto tn3 = solve_neel(3.0, 0.0, fx.dos0);
  struct Case {
    double u, t, ref;
    const char* what;
  };
  const Case gaps[2] = {
      {2.0, 0.0, solve_gap(2.0, 0.0, 0.0, tn2.t_n, fx.dos0).delta_af,
       "gap (u=2, T=0)"},
      {3.0, 0.2, solve_gap(3.0, 0.0, 0.2, tn3.t_n, fx.dos0).delta_af,
       "gap (u=3, T=0.2)"}};
  for (const auto& g : gaps) {
    const double s512 = gap_momentum(512, g.u, g.t);
    const double s1024 = gap_momentum(1024, g.u, g.t);
    const double rich = (4.0 * s1024 - s512) / 3.0;
    check(c, std::string(g.what) + " |momentum - dos|", std::abs(rich - g.ref),
          1e-6);
  }
  const Case neels[2] = {{2.0, 0.0, tn2.t_n, "neel (u=2)"},
                         {3.0, 0.0, tn3.t_n, "neel (u=3)"}};
  for (const auto& n : neels) {
    const double s512 = neel_momentum(512, n.u);
    const double s1024 = neel_momentum(1024, n.u);
    const double rich = (4.0 * s1024 - s512) / 3.0;
    check(c, std::string(n.what) + " |momentum - dos|", std::abs(rich - n.ref),
          1e-6);
  }
}

}  // namespace

bool VerifyCriterion::passed() const {
  for (const auto& s : subs) {
    if (!s.pass) return false;
  }
  return true;
}

const VerifySubCheck* VerifyCriterion::worst() const {
  const VerifySubCheck* w = nullptr;
  for (const auto& s : subs) {
    if (!w || s.measured / s.bound > w->measured / w->bound) w = &s;
  }
  return w;
}

std::vector<VerifyCriterion> run_verification(VerifyLevel level) {
  using Clock = std::chrono::steady_clock;
  struct Entry {
    int number;
    const char* label;
    void (*fn)(VerifyCriterion&, Fixtures&);
  };
  static const Entry kAll[] = {
      {1, "printed constants", criterion_1_constants},
      {2, "dos normalization", criterion_2_normalization},
      {3, "series vs quadrature", criterion_3_series},
      {4, "moment identities", criterion_4_moments},
      {5, "lemma suite", criterion_5_lemmas},
      {6, "bcs identities", criterion_6_bcs},
      {7, "neel asymptote convergence", criterion_7_neel_asym},
      {8, "2d universality breaking", criterion_8_universality_2d},
      {9, "3d universality", criterion_9_universality_3d},
      {10, "momentum-grid oracle", criterion_10_momentum},
  };

  const bool full = level == VerifyLevel::kFull;
  Fixtures fx(full);
  std::vector<VerifyCriterion> out;
  for (const auto& e : kAll) {
    if (!full && e.number != 1) continue;
    VerifyCriterion c;
    c.number = e.number;
    c.label = e.label;
    const auto start = Clock::now();
    try {
      e.fn(c, fx);
    } catch (const std::exception& ex) {
      check_true(c, std::string("no exception, got: ") + ex.what(), false);
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace neel
