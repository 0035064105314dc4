#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "volconj/volconj.hpp"

using volconj::cplx;

static void BM_li2_maclaurin(benchmark::State& state) {
  const cplx z(0.3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(volconj::li2(z));
}
BENCHMARK(BM_li2_maclaurin);

static void BM_li2_inversion(benchmark::State& state) {
  const cplx z(-4.0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(volconj::li2(z));
}
BENCHMARK(BM_li2_inversion);

static void BM_li2_reflection(benchmark::State& state) {
  const cplx z(0.8, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(volconj::li2(z));
}
BENCHMARK(BM_li2_reflection);

static void BM_li2_near_circle(benchmark::State& state) {
  const cplx z = std::exp(cplx(0.0, 1.1)) * 1.001;
  for (auto _ : state) benchmark::DoNotOptimize(volconj::li2(z));
}
BENCHMARK(BM_li2_near_circle);

static void BM_lobachevsky(benchmark::State& state) {
  double th = 0.4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(volconj::lobachevsky(th));
    th += 1e-9;  // defeat value caching without changing the branch
  }
}
BENCHMARK(BM_lobachevsky);

static void BM_holonomy_state(benchmark::State& state) {
  const cplx u(0.1, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(volconj::holonomy_state(u));
}
BENCHMARK(BM_holonomy_state);

static void BM_h_of_u(benchmark::State& state) {
  const cplx u(0.1, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(volconj::h_of_u(u));
}
BENCHMARK(BM_h_of_u);

static void BM_jones_eval(benchmark::State& state) {
  const volconj::JonesPoint pt{state.range(0), cplx(0.1, 0.1)};
  for (auto _ : state) benchmark::DoNotOptimize(volconj::jones_eval(pt));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_jones_eval)->RangeMultiplier(4)->Range(125, 8000)->Complexity();

static void BM_jones_eval_real_r(benchmark::State& state) {
  const long long N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(volconj::jones_eval_real_r(N, 0.93));
  state.SetComplexityN(N);
}
BENCHMARK(BM_jones_eval_real_r)->RangeMultiplier(4)->Range(125, 8000)->Complexity();

static void BM_riemann_discrepancy(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(volconj::riemann_discrepancy(400, 200, cplx(1.0, 0.1), 1));
}
BENCHMARK(BM_riemann_discrepancy);

static void BM_solve_filling(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(volconj::solve_filling({8.0, 1.0}));
}
BENCHMARK(BM_solve_filling);

static void BM_critical_point(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(volconj::critical_point(8));
}
BENCHMARK(BM_critical_point);

static void BM_limit_sweep(benchmark::State& state) {
  const std::vector<long long> Ns{100, 200, 400, 800};
  for (auto _ : state)
    benchmark::DoNotOptimize(volconj::limit_sweep(cplx(0.1, 0.1), Ns));
}
BENCHMARK(BM_limit_sweep);

BENCHMARK_MAIN();
