// Serial reference vs OpenMP kernels for grid sampling and coverage.
// Run with OMP_NUM_THREADS or --benchmark_filter to narrow the comparison.

#include <benchmark/benchmark.h>

#include "bimclp/bim_store.hpp"
#include "bimclp/shape.hpp"

using namespace bimclp;

namespace {

Shape sample_shape() {
  const Shape a = box(Point::xyz(-3, -3, -3), Point::xyz(3, 3, 3));
  const Shape b = poly_extrude({Point::xyz(-2, -1, -4), Point::xyz(0, 2, -4), Point::xyz(2, -1, -4)}, 8);
  return shape_union(subtract(a, b), box(Point::xyz(1, 1, 1), Point::xyz(4, 4, 4)));
}

void BM_GridMask(benchmark::State& state, Execution exec) {
  const Shape s = sample_shape();
  const Grid g(Point::xyz(-5, -5, -5), Point::xyz(5, 5, 5), Rational(1, static_cast<long>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(grid_mask(s, g, exec));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}

std::pair<std::vector<BimObject>, std::vector<BimObject>> beams(int n) {
  std::vector<BimObject> targets, covers;
  for (int t = 0; t < n; ++t) {
    const Rational y(2 * t);
    targets.push_back({"ifcbeam", "t" + std::to_string(t), Point::xyz(0, y, 0), Point::xyz(8, y + 1, 1), std::string("arq")});
    for (int c = 0; c < 4; ++c) {
      const Rational x0(2 * c), x1 = Rational(2 * c + 2) - (t % 3 == 0 && c == 1 ? Rational(1, 10) : Rational(0));
      covers.push_back({"ifcbeam", "c" + std::to_string(4 * t + c), Point::xyz(x0, y, 0), Point::xyz(x1, y + 1, 1),
                        std::string("str")});
    }
  }
  return {targets, covers};
}

void BM_Coverage(benchmark::State& state, Execution exec) {
  const auto [targets, covers] = beams(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coverage(targets, covers, exec));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * targets.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_GridMask, serial, Execution::Serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GridMask, parallel, Execution::Parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Coverage, serial, Execution::Serial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Coverage, parallel, Execution::Parallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
