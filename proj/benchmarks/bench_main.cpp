#include <benchmark/benchmark.h>

#include <map>

#include "spinmod/canonical.hpp"
#include "spinmod/moduli.hpp"
#include "spinmod/spin.hpp"
#include "spinmod/tropical.hpp"

using namespace spinmod;

namespace {

const std::vector<IsoClass>& graphs(int g, int n) {
  static std::map<std::pair<int, int>, std::vector<IsoClass>> cache;
  auto it = cache.find({g, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(g, n), enumerate_stable_graphs(g, n)).first;
  return it->second;
}

void BM_CanonicalKeyGraph(benchmark::State& st) {
  const auto& gs = graphs(static_cast<int>(st.range(0)), 0);
  for (auto _ : st) {
    for (const auto& c : gs) benchmark::DoNotOptimize(canonical_key(c.graph));
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(gs.size()));
}
BENCHMARK(BM_CanonicalKeyGraph)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_CanonicalKeySpin(benchmark::State& st) {
  const auto& gs = graphs(3, 0);
  std::vector<SpinGraph> sgs;
  for (const auto& c : gs) {
    for (const auto& s : enumerate_spin(c.graph).all()) sgs.push_back({c.graph, s});
  }
  for (auto _ : st) {
    for (const auto& sg : sgs) benchmark::DoNotOptimize(canonical_key(sg));
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(sgs.size()));
}
BENCHMARK(BM_CanonicalKeySpin)->Unit(benchmark::kMillisecond);

void BM_EnumerateClosure(benchmark::State& st) {
  const int g = static_cast<int>(st.range(0));
  const int n = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_stable_graphs(g, n));
}
BENCHMARK(BM_EnumerateClosure)->Args({2, 2})->Args({3, 0})->Args({3, 1})->Args({4, 0})->Unit(benchmark::kMillisecond);

void BM_EnumerateDirect(benchmark::State& st) {
  const int g = static_cast<int>(st.range(0));
  const int n = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_stable_graphs_direct(g, n));
}
BENCHMARK(BM_EnumerateDirect)->Args({2, 2})->Args({3, 0})->Unit(benchmark::kMillisecond);

void BM_SpinPoset(benchmark::State& st) {
  const int g = static_cast<int>(st.range(0));
  const int n = static_cast<int>(st.range(1));
  Budget b;
  b.jobs = static_cast<int>(st.range(2));
  for (auto _ : st) benchmark::DoNotOptimize(build_spin_poset(g, n, b));
}
BENCHMARK(BM_SpinPoset)->Args({2, 1, 1})->Args({3, 0, 1})->Args({3, 1, 1})->Args({3, 1, 4})->Unit(benchmark::kMillisecond);

void BM_ConeComplex(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_cone_complex(3, 0));
}
BENCHMARK(BM_ConeComplex)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
