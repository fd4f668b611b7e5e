#include <benchmark/benchmark.h>

#include "lpvi/oracle.hpp"
#include "lpvi/sampling.hpp"
#include "lpvi/vi_solver.hpp"

namespace {

using namespace lpvi;

void BM_DualityMap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = indexed_rng(7, n);
  const Point x = random_scaled_vector(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(duality_map(x, 3.0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_DualityMap)->Arg(2)->Arg(50)->Arg(1000);

ProblemSpec shifted_box_problem(std::size_t n) {
  std::vector<double> lo(n, 1.0), hi(n, 2.0), q(n, -1.5);
  return ProblemSpec(SpaceSpec(n, 2.0), ConvexSetSpec::box(Point(lo), Point(hi)),
                     MappingSpec::affine(Matrix::identity(n), Point(q)), Certificate(0.1, 1.0, 1.0));
}

void BM_PicardSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProblemSpec problem = shifted_box_problem(n);
  const LambdaSelection sel = select_lambda(problem);
  const Point x0 = Point::zeros(n);
  for (auto _ : state) benchmark::DoNotOptimize(picard_solve(problem, sel.lambda, x0, {}, sel));
}
BENCHMARK(BM_PicardSolve)->Arg(2)->Arg(100);

void BM_GridOracle(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const ProblemSpec problem = shifted_box_problem(2);
  for (auto _ : state) benchmark::DoNotOptimize(grid_vi_solve(problem, {{m, m}}));
}
BENCHMARK(BM_GridOracle)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
