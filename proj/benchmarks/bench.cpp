#include <benchmark/benchmark.h>

#include "ptdt/box_geometry.hpp"
#include "ptdt/double_dimer.hpp"
#include "ptdt/dt_vertex.hpp"
#include "ptdt/honeycomb.hpp"
#include "ptdt/pt_vertex.hpp"
#include "ptdt/weights.hpp"

using namespace ptdt;

namespace {

const Triple kSmall{Partition{1}, Partition{2}, Partition{1}};
const Triple kMixed{Partition{2, 1}, Partition{1, 1}, Partition{1}};

int valuation(const Triple& mu) {
  const RegionStats st = region_stats(mu);
  return -st.II - 2 * st.III;
}

void bm_dimer_z(benchmark::State& state) {
  const HoneycombGraph g = build_h(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dimer_z(g));
}
BENCHMARK(bm_dimer_z)->DenseRange(2, 5);

void bm_dd_z(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const NodeSet ns = node_set(N, kSmall);
  const HoneycombGraph g = build_h(N, Convention::PT);
  const Pairing sigma = rainbow_pairing(ns);
  for (auto _ : state) benchmark::DoNotOptimize(dd_z(g, ns, sigma));
}
BENCHMARK(bm_dd_z)->DenseRange(2, 4);

void bm_dt_vertex(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dt_vertex(kMixed, valuation(kMixed) + depth));
}
BENCHMARK(bm_dt_vertex)->DenseRange(2, 6, 2);

void bm_pt_vertex(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pt_vertex(kMixed, valuation(kMixed) + depth));
}
BENCHMARK(bm_pt_vertex)->DenseRange(2, 6, 2);

void bm_verify_condensation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_condensation(VertexKind::W, kMixed, 4));
}
BENCHMARK(bm_verify_condensation);

void bm_weight_report(benchmark::State& state) {
  const Triple mu{Partition{4, 3, 1}, Partition{3, 3}, Partition{2, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(weight_report(mu, 8));
}
BENCHMARK(bm_weight_report);

}  // namespace

BENCHMARK_MAIN();
