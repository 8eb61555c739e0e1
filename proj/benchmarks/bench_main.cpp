#include <benchmark/benchmark.h>

#include <random>

#include "nfai/certificates.hpp"
#include "nfai/decision.hpp"
#include "nfai/hardness.hpp"
#include "nfai/products.hpp"

namespace {

using namespace nfai;

Bundle complete_pair(std::size_t n) {
  const Nfa a = random_nfa(n, 2, 1.0, 1);
  return Bundle({a, a});
}

Nfa without_finals(const Nfa& a) {
  return Nfa(a.n_states(), a.alphabet_size(), a.initial(), {}, a.transitions());
}

// Empty instance: the last automaton has no final state, so a decider has
// to exhaust the accessible part.
Bundle empty_instance(std::size_t k, std::size_t n, double density) {
  std::vector<Nfa> automata;
  for (std::size_t i = 0; i < k; ++i) automata.push_back(random_nfa(n, 2, density, 11 + i));
  automata.back() = without_finals(automata.back());
  return Bundle(std::move(automata));
}

// Accessible part of the complete-relation pair: m^2 versus m*n transitions.
void BM_ExploreDirect(benchmark::State& state) {
  const Bundle b = complete_pair(static_cast<std::size_t>(state.range(0)));
  const DirectSpace space(b);
  for (auto _ : state) benchmark::DoNotOptimize(explore(space));
  state.counters["transitions"] = static_cast<double>(explore(space).transitions);
}
BENCHMARK(BM_ExploreDirect)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ExploreNodding(benchmark::State& state) {
  const Bundle b = complete_pair(static_cast<std::size_t>(state.range(0)));
  const NoddingSpace space(b, false);
  for (auto _ : state) benchmark::DoNotOptimize(explore(space));
  state.counters["transitions"] = static_cast<double>(explore(space).transitions);
}
BENCHMARK(BM_ExploreNodding)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_DecideNodding(benchmark::State& state) {
  const Bundle b = empty_instance(3, static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(decide_empty(b));
}
BENCHMARK(BM_DecideNodding)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DecideDirect(benchmark::State& state) {
  const Bundle b = empty_instance(3, static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(decide_direct_baseline(b));
}
BENCHMARK(BM_DecideDirect)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BoolMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BoolMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, (rng() & 7U) == 0);
  }
  return m;
}

template <BoolMatrix (*Kernel)(const BoolMatrix&, const BoolMatrix&)>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BoolMatrix a = random_matrix(n, 1);
  const BoolMatrix b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}
BENCHMARK_TEMPLATE(BM_Multiply, multiply_rowwise)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK_TEMPLATE(BM_Multiply, multiply_four_russians)->RangeMultiplier(4)->Range(64, 1024);

void BM_VerifyCutMatrix(benchmark::State& state) {
  const Bundle b = empty_instance(3, static_cast<std::size_t>(state.range(0)), 0.1);
  const StaggeredCut cut = extract_staggered_cut(b);
  for (auto _ : state) benchmark::DoNotOptimize(verify_staggered_cut(b, cut));
}
BENCHMARK(BM_VerifyCutMatrix)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_VerifyCutNaive(benchmark::State& state) {
  const Bundle b = empty_instance(3, static_cast<std::size_t>(state.range(0)), 0.1);
  const StaggeredCut cut = extract_staggered_cut(b);
  for (auto _ : state) benchmark::DoNotOptimize(verify_staggered_cut_naive(b, cut));
}
BENCHMARK(BM_VerifyCutNaive)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
