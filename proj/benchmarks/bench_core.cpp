#include <benchmark/benchmark.h>

#include "hbl/boundary_diagnostics.hpp"
#include "hbl/conformal_invariants.hpp"
#include "hbl/hyperbolic.hpp"
#include "hbl/ring_capacity.hpp"

namespace {

void BM_tau2(benchmark::State& state) {
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbl::tau2(t).value);
    t = t < 100.0 ? t * 1.01 : 0.5;
  }
}
BENCHMARK(BM_tau2);

void BM_step_map_eval(benchmark::State& state) {
  const auto f = hbl::poisson_step_map(hbl::StepBoundaryFunction::regular_polygon(state.range(0)));
  const hbl::Complex z{0.3, -0.55};
  for (auto _ : state) benchmark::DoNotOptimize(hbl::eval_map(f, z));
}
BENCHMARK(BM_step_map_eval)->Arg(3)->Arg(16)->Arg(128);

void BM_dilatation(benchmark::State& state) {
  const auto f = hbl::poisson_step_map(hbl::StepBoundaryFunction::regular_polygon(3));
  const hbl::Complex z{0.3, -0.55};
  for (auto _ : state) benchmark::DoNotOptimize(hbl::dilatation(f, z));
}
BENCHMARK(BM_dilatation);

void BM_lm_integral(benchmark::State& state) {
  const auto a = hbl::AnalyticFunction::scaled_identity(0.5);
  const hbl::GammaCurve c(0.0, 0.2);
  const double delta = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hbl::lm_integral(a, c, delta));
}
BENCHMARK(BM_lm_integral)->DenseRange(1, 7, 3)->Unit(benchmark::kMillisecond);

void BM_lm_classify_triangle(benchmark::State& state) {
  const auto f = hbl::poisson_step_map(hbl::StepBoundaryFunction::regular_polygon(3));
  const auto a = f.dilatation_function();
  const auto sched = hbl::default_delta_schedule();
  for (auto _ : state) benchmark::DoNotOptimize(hbl::lm_classify(a, 3.14159, 0.2, sched));
}
BENCHMARK(BM_lm_classify_triangle)->Unit(benchmark::kMillisecond);

void BM_ring_capacity_annulus(benchmark::State& state) {
  hbl::RingDomainSpec spec;
  spec.outer = hbl::OuterCircle{2.0};
  spec.grid_resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hbl::ring_capacity_numeric(spec).value);
}
BENCHMARK(BM_ring_capacity_annulus)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_dist_halfplane(benchmark::State& state) {
  const hbl::Complex a{0.3, 1.2}, b{-0.7, 0.01};
  for (auto _ : state) benchmark::DoNotOptimize(hbl::dist_halfplane(a, b));
}
BENCHMARK(BM_dist_halfplane);

}  // namespace

BENCHMARK_MAIN();
