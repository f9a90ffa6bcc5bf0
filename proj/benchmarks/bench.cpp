#include <benchmark/benchmark.h>

#include "eulerfan/eulerfan.hpp"

namespace {

using namespace eulerfan;

void BM_SolveRiemannTwoShocks(benchmark::State& state) {
  const RiemannData& data = paper_fixture().data;
  for (auto _ : state) benchmark::DoNotOptimize(solve_riemann(data));
}
BENCHMARK(BM_SolveRiemannTwoShocks);

void BM_SolveRiemannRarefactions(benchmark::State& state) {
  const RiemannData data{State{1.0, 0.0, -1.0}, State{2.0, 0.3, 1.5}, EosParams{1.0, 1.4}};
  for (auto _ : state) benchmark::DoNotOptimize(solve_riemann(data));
}
BENCHMARK(BM_SolveRiemannRarefactions);

void BM_SolveFamily(benchmark::State& state) {
  const PaperFixture& f = paper_fixture();
  FanSubsolution seed = f.sub;
  seed.mu0 *= 1.01;
  seed.gamma1 *= 0.99;
  for (auto _ : state) benchmark::DoNotOptimize(solve_family(f.data, f.sub.rho1, f.sub.C1, seed));
}
BENCHMARK(BM_SolveFamily);

void BM_ActionClosedForm(benchmark::State& state) {
  const PaperFixture& f = paper_fixture();
  const PiecewiseSolution glued = build_glued_solution(f.data, f.sub, 0.5, 1.0);
  const ActionWindow w{1.0, -f.sub.mu0 * 0.5, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(action_closed_form(glued, w));
}
BENCHMARK(BM_ActionClosedForm);

void BM_ActionQuadrature(benchmark::State& state) {
  const PaperFixture& f = paper_fixture();
  const PiecewiseSolution glued = build_glued_solution(f.data, f.sub, 0.5, 1.0);
  const ActionWindow w{1.0, -f.sub.mu0 * 0.5, 1.0};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(action_quadrature(glued, w, n, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ActionQuadrature)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);

}  // namespace
BENCHMARK_MAIN();
