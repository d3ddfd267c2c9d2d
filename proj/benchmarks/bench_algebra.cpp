#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "subshift/reduction.hpp"
#include "subshift/syntax.hpp"

using namespace subshift;

namespace {

Shift golden_mean() { return build_follower_graph(parse_shift("alphabet: a b\nforbidden: bb\n")); }

Word random_word(const Shift& g, std::mt19937_64& rng, std::size_t max_len) {
  auto words = g->enumerate_prefix_legal(rng() % (max_len + 1));
  return words[rng() % words.size()];
}

std::vector<AlgebraElement> random_elements(const Algebra& alg, std::size_t count, std::size_t max_len) {
  std::mt19937_64 rng(42);
  std::vector<AlgebraElement> out;
  while (out.size() < count) {
    AlgebraElement x = alg.zero();
    for (int t = 0; t < 3; ++t) {
      ClopenSet a = cylinder(alg.shift(), random_word(alg.shift(), rng, 2));
      x = x + scale(alg.ring().from_integer(static_cast<long>(rng() % 5) - 2),
                    alg.mono(random_word(alg.shift(), rng, max_len), a, random_word(alg.shift(), rng, max_len)));
    }
    if (!x.is_zero()) out.push_back(x);
  }
  return out;
}

void BM_Multiply(benchmark::State& state) {
  Algebra alg(golden_mean(), Ring::integer());
  auto xs = random_elements(alg, 64, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(6);

void BM_Reduce(benchmark::State& state) {
  Algebra alg(golden_mean(), Ring::integer());
  auto xs = random_elements(alg, 64, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce(xs[i++ % 64]));
}
BENCHMARK(BM_Reduce)->Arg(2)->Arg(4);

void BM_SetOps(benchmark::State& state) {
  Shift g = golden_mean();
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<ClopenSet> sets;
  for (int i = 0; i < 32; ++i) sets.push_back(unite(cylinder(g, random_word(g, rng, n)), follower(g, random_word(g, rng, n))));
  std::size_t i = 0;
  for (auto _ : state) {
    const ClopenSet& a = sets[i % 32];
    const ClopenSet& b = sets[(i + 7) % 32];
    benchmark::DoNotOptimize(is_subset(intersect(a, complement(b)), unite(a, b)));
    ++i;
  }
}
BENCHMARK(BM_SetOps)->Arg(3)->Arg(6)->Arg(9);

void BM_Selftest(benchmark::State& state) {
  Shift g = golden_mean();
  for (auto _ : state) benchmark::DoNotOptimize(relations_selftest(g, Ring::integer(), 2));
}
BENCHMARK(BM_Selftest)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
