// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "fuzzyts/bisim.hpp"
#include "support/random_systems.hpp"

using namespace fuzzyts;
using namespace fuzzyts::testing;

namespace {

Fts bench_system(std::size_t base_states) {
  std::mt19937_64 rng(base_states);
  return random_redundant_fts(rng, base_states, base_states, label_names(3), 4.0 / static_cast<double>(base_states));
}

template <Relation (*Kernel)(const Fts&, const Fts&, const Relation&)>
void BM_Gamma(benchmark::State& state) {
  const Fts f = bench_system(static_cast<std::size_t>(state.range(0)));
  const Relation full = Relation::full(f.num_states(), f.num_states());
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, f, full));
  state.counters["pairs"] = static_cast<double>(f.num_states() * f.num_states());
}

template <Relation (*Kernel)(const Fts&, const Fts&, std::size_t)>
void BM_Enumeration(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Fts a = random_redundant_fts(rng, 2, 1, label_names(2), 0.5);
  const Fts b = with_clones(rng, a, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b, 16));
  state.counters["pairs"] = static_cast<double>(a.num_states() * b.num_states());
}

Relation full_bisimilarity(const Fts& f1, const Fts& f2, const Relation&) { return bisimilarity(f1, f2); }

}  // namespace

BENCHMARK(BM_Gamma<gamma>)->Name("gamma/parallel")->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Gamma<gamma_serial>)->Name("gamma/serial")->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Gamma<full_bisimilarity>)->Name("bisimilarity")->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Enumeration<enumerate_bisimulations_bruteforce>)->Name("enumeration/parallel")->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumeration<enumerate_bisimulations_bruteforce_serial>)->Name("enumeration/serial")->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
