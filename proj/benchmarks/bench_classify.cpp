#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "chebroot/classifier.hpp"
#include "chebroot/critical.hpp"
#include "chebroot/sturm.hpp"

namespace {

using namespace chebroot;

std::vector<MonicQuintic> random_quintics(std::size_t n) {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> d(-10, 10);
  std::vector<MonicQuintic> out;
  while (out.size() < n) {
    MonicQuintic q(d(rng), d(rng), d(rng), d(rng), d(rng));
    if (depress(q).m < 0) out.push_back(q);
  }
  return out;
}

void BM_ClassifyGolden(benchmark::State& state) {
  const MonicQuintic q(0, -5, 0, 5, 0);
  for (auto _ : state) benchmark::DoNotOptimize(classify(q));
}
BENCHMARK(BM_ClassifyGolden);

void BM_ClassifyRandom(benchmark::State& state) {
  const auto qs = random_quintics(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(qs[i++ % qs.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ClassifyRandom);

void BM_SturmCount(benchmark::State& state) {
  const auto qs = random_quintics(1024);
  std::vector<SturmChain> chains;
  for (const auto& q : qs) chains.push_back(build_chain(q.as_poly()));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_all_roots(chains[i++ % chains.size()]));
}
BENCHMARK(BM_SturmCount);

void BM_BuildChain(benchmark::State& state) {
  const auto qs = random_quintics(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(qs[i++ % qs.size()].as_poly()));
}
BENCHMARK(BM_BuildChain);

void BM_SolveCritical(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-20, 20);
  std::vector<TrigParams> ps;
  for (int k = 0; k < 1024; ++k) ps.push_back({d(rng), d(rng), d(rng)});
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_critical(ps[i++ % ps.size()]));
}
BENCHMARK(BM_SolveCritical);

}  // namespace

BENCHMARK_MAIN();
