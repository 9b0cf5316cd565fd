#include <benchmark/benchmark.h>

#include "neel/bcs.hpp"
#include "neel/dos.hpp"
#include "neel/gap.hpp"
#include "neel/neel.hpp"
#include "neel/series.hpp"

using namespace neel;

namespace {

const DosEvaluator& dos0() {
  static DosEvaluator d(0.0);
  return d;
}

const DosEvaluator& dos05() {
  static DosEvaluator d = [] {
    DosEvaluator e(0.5);
    e.build_interpolant();
    return e;
  }();
  return d;
}

void bm_n0_plain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(n0(0.37));
}
BENCHMARK(bm_n0_plain);

void bm_n0_near_singular(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(n0(1e-6));
}
BENCHMARK(bm_n0_near_singular);

void bm_n0_series(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(n0_series(0.1));
}
BENCHMARK(bm_n0_series);

void bm_n_tz_direct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(n_tz(0.37, 0.5));
}
BENCHMARK(bm_n_tz_direct);

void bm_dos_interpolant_eval(benchmark::State& state) {
  const auto& d = dos05();
  for (auto _ : state) benchmark::DoNotOptimize(d.value(0.37));
}
BENCHMARK(bm_dos_interpolant_eval);

void bm_dos_interpolant_build(benchmark::State& state) {
  for (auto _ : state) {
    DosEvaluator d(0.5);
    d.build_interpolant();
    benchmark::DoNotOptimize(d.interpolant_sup_error());
  }
}
BENCHMARK(bm_dos_interpolant_build)->Unit(benchmark::kMillisecond);

void bm_f_tz(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_tz(0.1, dos0()));
}
BENCHMARK(bm_f_tz)->Unit(benchmark::kMillisecond);

void bm_f_bcs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_bcs(0.3));
}
BENCHMARK(bm_f_bcs)->Unit(benchmark::kMillisecond);

void bm_solve_neel_2d(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_neel(2.0, 0.0, dos0()).t_n);
}
BENCHMARK(bm_solve_neel_2d)->Unit(benchmark::kMillisecond);

void bm_solve_neel_3d(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_neel(2.0, 0.5, dos05()).t_n);
}
BENCHMARK(bm_solve_neel_3d)->Unit(benchmark::kMillisecond);

void bm_solve_gap(benchmark::State& state) {
  const double tn = solve_neel(2.0, 0.0, dos0()).t_n;
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_gap(2.0, 0.0, 0.1, tn, dos0()).delta_af);
}
BENCHMARK(bm_solve_gap)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
