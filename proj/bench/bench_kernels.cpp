#include <benchmark/benchmark.h>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/dodecacode.hpp"
#include "cosetforge/graph.hpp"
#include "cosetforge/kernels.hpp"

using namespace cosetforge;
namespace k = cosetforge::kernels;

namespace {

const AdditiveCode& dminus() {
  static const AdditiveCode c = dodecacode::punctured_code();
  return c;
}

const Graph& gamma() {
  static const Graph g = coset_graph(dminus());
  return g;
}

std::vector<std::uint64_t> unit_syndromes() {
  const auto& table_rows = trace_dual(dminus()).canonical_basis();
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < 22; ++i) {
    const auto x = Gf4Vec::from_packed(11, std::uint64_t{1} << i);
    std::uint64_t s = 0;
    for (std::size_t r = 0; r < table_rows.size(); ++r) s |= std::uint64_t{trace_ip(table_rows[r], x)} << r;
    out.push_back(s);
  }
  return out;
}

template <bool Parallel>
void BM_SpanCensus(benchmark::State& state) {
  const auto& rows = dminus().packed_basis().rows();
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(k::parallel::span_weight_census(rows, k::quaternary_fold(11), 11));
    } else {
      benchmark::DoNotOptimize(k::serial::span_weight_census(rows, k::quaternary_fold(11), 11));
    }
  }
}

template <bool Parallel>
void BM_SyndromeSweep(benchmark::State& state) {
  const auto units = unit_syndromes();
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(k::parallel::syndrome_sweep(units, 10, k::quaternary_fold(11), 11));
    } else {
      benchmark::DoNotOptimize(k::serial::syndrome_sweep(units, 10, k::quaternary_fold(11), 11));
    }
  }
}

template <bool Parallel>
void BM_DistanceRegularity(benchmark::State& state) {
  const auto csr = gamma().csr();
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(k::parallel::distance_regularity_census(csr));
    } else {
      benchmark::DoNotOptimize(k::serial::distance_regularity_census(csr));
    }
  }
}

template <bool Parallel>
void BM_CommonNeighbors(benchmark::State& state) {
  static const Graph d2 = distance_k_graph(gamma(), 2);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(k::parallel::common_neighbor_census(d2.rows()));
    } else {
      benchmark::DoNotOptimize(k::serial::common_neighbor_census(d2.rows()));
    }
  }
}

}  // namespace

BENCHMARK(BM_SpanCensus<false>)->Name("span_census/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpanCensus<true>)->Name("span_census/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SyndromeSweep<false>)->Name("syndrome_sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SyndromeSweep<true>)->Name("syndrome_sweep/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceRegularity<false>)->Name("drg_census/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceRegularity<true>)->Name("drg_census/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommonNeighbors<false>)->Name("srg_census/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommonNeighbors<true>)->Name("srg_census/parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
