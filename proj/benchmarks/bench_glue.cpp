#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qglue/analysis.hpp"
#include "qglue/builders.hpp"
#include "qglue/gates.hpp"
#include "qglue/glue.hpp"
#include "qglue/recursion.hpp"

namespace {

using namespace qglue;

PureState random_state(int d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<cplx> amps(checked_pow(static_cast<std::size_t>(d), n));
  for (cplx& a : amps) a = {gauss(rng), gauss(rng)};
  return from_amplitudes(d, n, std::move(amps));
}

// The ten-qubit state exercised by the uniformity scans.
const PureState& glued_rings() {
  static const PureState state =
      glue(ring_graph_state(5), 4, ring_graph_state(5), 0, generalized_bell_gate(2));
  return state;
}

void BM_glue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PureState left = ghz(n);
  const PureState right = ghz(n);
  const TwoQuditGate gate = generalized_bell_gate(2);
  for (auto _ : state) benchmark::DoNotOptimize(glue(left, n - 1, right, 0, gate));
}
BENCHMARK(BM_glue)->Arg(3)->Arg(5)->Arg(7);

void BM_glue_star_star(benchmark::State& state) {
  const PureState side = ghz(5);
  const TwoQuditGate gate = builtin_gate(BuiltinGate::V1);
  for (auto _ : state)
    benchmark::DoNotOptimize(glue_star_star(side, 4, side, 0, gate, std::pair{0, 0}));
}
BENCHMARK(BM_glue_star_star);

void BM_reduced_density(benchmark::State& state) {
  const PureState& big = glued_rings();
  const std::vector<int> subset = {0, 5};
  for (auto _ : state) benchmark::DoNotOptimize(reduced_density(big, subset));
}
BENCHMARK(BM_reduced_density);

void BM_is_k_uniform(benchmark::State& state) {
  const PureState& big = glued_rings();
  const int k = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(is_k_uniform(big, k, 1e-9, threads));
}
BENCHMARK(BM_is_k_uniform)->Args({2, 1})->Args({2, 0});

void BM_average_purity(benchmark::State& state) {
  const PureState s = random_state(2, static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(average_purity(s));
}
BENCHMARK(BM_average_purity)->Arg(6)->Arg(8);

void BM_chain(benchmark::State& state) {
  const TwoQuditGate gate = builtin_gate(BuiltinGate::V3);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_chain(gate, steps));
}
BENCHMARK(BM_chain)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
