#include <benchmark/benchmark.h>

#include "dcorr/fock.hpp"
#include "dcorr/special_series.hpp"

using namespace dcorr;

namespace {

// Fresh tables each iteration, so the workspace cache never hits.
void BM_FboSymbolic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f_bo(n, 6));
}
BENCHMARK(BM_FboSymbolic)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FboEvaluated(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<BigRational> u;
  for (std::size_t j = 0; j < n; ++j) {
    BigRational x(static_cast<int>(j) + 2, static_cast<int>(j) + 5);
    x.canonicalize();
    u.push_back(x);
  }
  for (auto _ : state) {
    auto ws = Workspace::evaluated(u);
    benchmark::DoNotOptimize(f_bo(*ws, 8));
  }
}
BENCHMARK(BM_FboEvaluated)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_OracleTrace(benchmark::State& state) {
  const FockSpace space{static_cast<std::size_t>(state.range(0)), true};
  TraceOptions opt;
  opt.z_grading = true;
  for (auto _ : state) {
    auto ws = Workspace::evaluated({BigRational(2, 3)}, space.pairs);
    benchmark::DoNotOptimize(oracle_trace(space, *ws, 6, opt));
  }
}
BENCHMARK(BM_OracleTrace)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
