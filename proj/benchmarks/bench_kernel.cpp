#include <benchmark/benchmark.h>

#include "dcorr/laurent.hpp"
#include "support/generators.hpp"

using namespace dcorr;

namespace {

void BM_LaurentMul(benchmark::State& state) {
  testing::Gen g(7);
  auto vars = testing::t_table(3);
  const int terms = static_cast<int>(state.range(0));
  LaurentPoly a = g.nonzero_laurent(vars, terms, 6), b = g.nonzero_laurent(vars, terms, 6);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(terms);
}
BENCHMARK(BM_LaurentMul)->RangeMultiplier(2)->Range(4, 64);

// gcd of a·c and b·c for random a, b, c; the common factor has to be recovered.
void BM_Gcd(benchmark::State& state) {
  testing::Gen g(11);
  auto vars = testing::t_table(static_cast<std::size_t>(state.range(0)));
  LaurentPoly c = g.nonzero_laurent(vars, 3, 3);
  LaurentPoly a = g.nonzero_laurent(vars, 3, 3) * c, b = g.nonzero_laurent(vars, 3, 3) * c;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->DenseRange(1, 3);

}  // namespace
