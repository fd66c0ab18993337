#include "cosetforge/kernels.hpp"

#include <algorithm>

#include "cosetforge/error.hpp"

namespace cosetforge::kernels {

namespace {

// Upper bits of an enumeration index that select an independent chunk.
unsigned chunk_bits(std::size_t total_bits) {
  return static_cast<unsigned>(std::min<std::size_t>(total_bits, 10));
}

void census_range(std::span<const std::uint64_t> rows, std::size_t low_bits, std::uint64_t chunk,
                  WeightFold fold, std::vector<std::uint64_t>& counts, std::uint64_t offset = 0) {
  std::uint64_t v = offset;
  for (std::size_t j = low_bits; j < rows.size(); ++j) {
    if ((chunk >> (j - low_bits)) & 1) v ^= rows[j];
  }
  ++counts[fold.weight(v)];
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    v ^= rows[std::countr_zero(i)];
    ++counts[fold.weight(v)];
  }
}

struct SweepState {
  std::vector<std::uint8_t> leader_weight;
  std::vector<std::uint64_t> leader;
  std::vector<std::uint64_t> histogram;

  SweepState(std::size_t syndromes, std::size_t max_weight)
      : leader_weight(syndromes, 0xff), leader(syndromes, 0), histogram(syndromes * (max_weight + 1), 0) {}
};

void sweep_range(std::span<const std::uint64_t> units, std::size_t low_bits, std::uint64_t chunk, WeightFold fold,
                 std::size_t max_weight, SweepState& st) {
  std::uint64_t v = chunk << low_bits;
  std::uint64_t s = 0;
  for (std::size_t j = low_bits; j < units.size(); ++j) {
    if ((v >> j) & 1) s ^= units[j];
  }
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 0;; ) {
    const unsigned w = fold.weight(v);
    ++st.histogram[s * (max_weight + 1) + w];
    if (w < st.leader_weight[s] || (w == st.leader_weight[s] && v < st.leader[s])) {
      st.leader_weight[s] = static_cast<std::uint8_t>(w);
      st.leader[s] = v;
    }
    if (++i == steps) break;
    const int k = std::countr_zero(i);
    v ^= std::uint64_t{1} << k;
    s ^= units[k];
  }
}

void merge_sweep(SweepState& into, const SweepState& from) {
  for (std::size_t s = 0; s < into.leader.size(); ++s) {
    if (from.leader_weight[s] < into.leader_weight[s] ||
        (from.leader_weight[s] == into.leader_weight[s] && from.leader[s] < into.leader[s])) {
      into.leader_weight[s] = from.leader_weight[s];
      into.leader[s] = from.leader[s];
    }
  }
  for (std::size_t i = 0; i < into.histogram.size(); ++i) into.histogram[i] += from.histogram[i];
}

void check_sweep_input(std::span<const std::uint64_t> units, unsigned syndrome_bits, std::size_t max_weight) {
  if (units.size() > 40) throw BudgetExceeded("ambient sweep above 2^40 vectors");
  if (syndrome_bits > 26) throw BudgetExceeded("syndrome space above 2^26");
  if (max_weight > 0xfe) throw InvalidArgument("weight does not fit the leader table");
}

// Per-source statistics used by the distance-regularity census.
struct SourceCensus {
  bool connected = true;
  std::vector<std::uint64_t> b, c;
  std::vector<std::uint32_t> representative;  // first vertex met in each layer
  std::optional<PairWitness> violation;
};

SourceCensus census_from(CsrView g, std::uint32_t u, std::vector<int>& dist, std::vector<std::uint32_t>& queue) {
  SourceCensus out;
  bfs_distances(g, u, dist, queue);
  if (queue.size() != g.vertex_count()) {
    out.connected = false;
    return out;
  }
  const auto diameter = static_cast<std::size_t>(dist[queue.back()]);
  out.b.assign(diameter + 1, 0);
  out.c.assign(diameter + 1, 0);
  out.representative.assign(diameter + 1, 0);
  std::vector<bool> seen_layer(diameter + 1, false);
  for (auto v : queue) {
    const int i = dist[v];
    std::uint64_t b = 0, c = 0;
    for (auto x : g.of(v)) {
      if (dist[x] == i + 1) ++b;
      else if (dist[x] == i - 1) ++c;
    }
    if (!seen_layer[i]) {
      seen_layer[i] = true;
      out.b[i] = b;
      out.c[i] = c;
      out.representative[i] = v;
    } else if (out.b[i] != b || out.c[i] != c) {
      out.violation = PairWitness{u, v, static_cast<std::uint32_t>(i)};
      return out;
    }
  }
  return out;
}

DistanceRegularityCensus merge_census(const std::vector<SourceCensus>& per_source) {
  DistanceRegularityCensus out;
  if (per_source.empty()) return out;
  for (std::size_t u = 0; u < per_source.size(); ++u) {
    const auto& sc = per_source[u];
    if (!sc.connected) {
      out.connected = false;
      return out;
    }
    if (sc.violation) {
      out.violation = sc.violation;
      return out;
    }
    if (u == 0) {
      out.b = sc.b;
      out.c = sc.c;
      continue;
    }
    if (sc.b != out.b || sc.c != out.c) {
      const std::size_t layers = std::min(sc.b.size(), out.b.size());
      std::size_t i = 0;
      while (i < layers && sc.b[i] == out.b[i] && sc.c[i] == out.c[i]) ++i;
      if (i == layers) i = layers - 1;
      out.violation = PairWitness{static_cast<std::uint32_t>(u), sc.representative[std::min(i, sc.b.size() - 1)],
                                  static_cast<std::uint32_t>(i)};
      return out;
    }
  }
  return out;
}

void census_pairs_from(RowView g, std::size_t u, CommonNeighborCensus& cn) {
  const auto ru = g.row(u);
  for (std::size_t v = u + 1; v < g.vertex_count; ++v) {
    const auto rv = g.row(v);
    std::uint64_t common = 0;
    for (std::size_t k = 0; k < g.words_per_row; ++k) common += std::popcount(ru[k] & rv[k]);
    const bool adjacent = (ru[v / 64] >> (v % 64)) & 1;
    const PairWitness at{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), adjacent ? 1u : 2u};
    if (adjacent) {
      ++cn.adjacent_pairs;
      if (common < cn.adjacent_min) cn.adjacent_min = common, cn.adjacent_min_at = at;
      if (common > cn.adjacent_max) cn.adjacent_max = common, cn.adjacent_max_at = at;
    } else {
      ++cn.nonadjacent_pairs;
      if (common < cn.nonadjacent_min) cn.nonadjacent_min = common, cn.nonadjacent_min_at = at;
      if (common > cn.nonadjacent_max) cn.nonadjacent_max = common, cn.nonadjacent_max_at = at;
    }
  }
}

// Merging in increasing u keeps the first witness in (u, v) order.
void merge_pairs(CommonNeighborCensus& into, const CommonNeighborCensus& from) {
  into.adjacent_pairs += from.adjacent_pairs;
  into.nonadjacent_pairs += from.nonadjacent_pairs;
  if (from.adjacent_min < into.adjacent_min) into.adjacent_min = from.adjacent_min, into.adjacent_min_at = from.adjacent_min_at;
  if (from.adjacent_max > into.adjacent_max) into.adjacent_max = from.adjacent_max, into.adjacent_max_at = from.adjacent_max_at;
  if (from.nonadjacent_min < into.nonadjacent_min) {
    into.nonadjacent_min = from.nonadjacent_min;
    into.nonadjacent_min_at = from.nonadjacent_min_at;
  }
  if (from.nonadjacent_max > into.nonadjacent_max) {
    into.nonadjacent_max = from.nonadjacent_max;
    into.nonadjacent_max_at = from.nonadjacent_max_at;
  }
}

void distance_row(CsrView g, std::uint32_t u, std::size_t k, std::vector<int>& dist, std::vector<std::uint32_t>& queue,
                  std::uint64_t* row) {
  bfs_distances(g, u, dist, queue);
  for (auto v : queue) {
    if (static_cast<std::size_t>(dist[v]) == k) row[v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

void signed_sums_for(std::span<const std::uint64_t> words, std::span<const std::uint8_t> weights, std::uint64_t offset,
                     std::vector<std::int64_t>& out) {
  for (std::size_t i = 0; i < words.size(); ++i) out[weights[i]] += std::popcount(words[i] & offset) & 1 ? -1 : 1;
}

std::vector<std::uint8_t> word_weights(std::span<const std::uint64_t> words, WeightFold fold) {
  std::vector<std::uint8_t> w(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) w[i] = static_cast<std::uint8_t>(fold.weight(words[i]));
  return w;
}

}  // namespace

void bfs_distances(CsrView graph, std::uint32_t source, std::vector<int>& dist, std::vector<std::uint32_t>& queue) {
  dist.assign(graph.vertex_count(), -1);
  queue.clear();
  queue.reserve(graph.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (auto x : graph.of(v)) {
      if (dist[x] < 0) {
        dist[x] = dist[v] + 1;
        queue.push_back(x);
      }
    }
  }
}

namespace serial {

std::vector<std::uint64_t> span_weight_census(std::span<const std::uint64_t> rows, WeightFold fold,
                                              std::size_t max_weight) {
  std::vector<std::uint64_t> counts(max_weight + 1, 0);
  census_range(rows, rows.size(), 0, fold, counts);
  return counts;
}

std::vector<std::vector<std::uint64_t>> coset_weight_censuses(std::span<const std::uint64_t> rows,
                                                              std::span<const std::uint64_t> offsets, WeightFold fold,
                                                              std::size_t max_weight) {
  std::vector<std::vector<std::uint64_t>> out(offsets.size(), std::vector<std::uint64_t>(max_weight + 1, 0));
  for (std::size_t i = 0; i < offsets.size(); ++i) census_range(rows, rows.size(), 0, fold, out[i], offsets[i]);
  return out;
}

SyndromeSweep syndrome_sweep(std::span<const std::uint64_t> unit_syndromes, unsigned syndrome_bits, WeightFold fold,
                             std::size_t max_weight) {
  check_sweep_input(unit_syndromes, syndrome_bits, max_weight);
  SweepState st(std::size_t{1} << syndrome_bits, max_weight);
  sweep_range(unit_syndromes, unit_syndromes.size(), 0, fold, max_weight, st);
  return {max_weight, std::move(st.leader_weight), std::move(st.leader), std::move(st.histogram)};
}

void fwht(std::span<std::int64_t> data) {
  const std::size_t n = data.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t x = data[j], y = data[j + h];
        data[j] = x + y;
        data[j + h] = x - y;
      }
    }
  }
}

DistanceRegularityCensus distance_regularity_census(CsrView graph) {
  std::vector<SourceCensus> per_source(graph.vertex_count());
  std::vector<int> dist;
  std::vector<std::uint32_t> queue;
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    per_source[u] = census_from(graph, static_cast<std::uint32_t>(u), dist, queue);
  }
  return merge_census(per_source);
}

CommonNeighborCensus common_neighbor_census(RowView rows) {
  CommonNeighborCensus cn;
  for (std::size_t u = 0; u < rows.vertex_count; ++u) census_pairs_from(rows, u, cn);
  return cn;
}

std::vector<std::uint64_t> distance_k_rows(CsrView graph, std::size_t k, std::size_t words_per_row) {
  std::vector<std::uint64_t> bits(graph.vertex_count() * words_per_row, 0);
  std::vector<int> dist;
  std::vector<std::uint32_t> queue;
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    distance_row(graph, static_cast<std::uint32_t>(u), k, dist, queue, bits.data() + u * words_per_row);
  }
  return bits;
}

std::vector<std::vector<std::int64_t>> signed_weight_sums(std::span<const std::uint64_t> words, WeightFold fold,
                                                          std::span<const std::uint64_t> offsets, std::size_t max_weight) {
  const auto weights = word_weights(words, fold);
  std::vector<std::vector<std::int64_t>> out(offsets.size(), std::vector<std::int64_t>(max_weight + 1, 0));
  for (std::size_t i = 0; i < offsets.size(); ++i) signed_sums_for(words, weights, offsets[i], out[i]);
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> span_weight_census(std::span<const std::uint64_t> rows, WeightFold fold,
                                              std::size_t max_weight) {
  const unsigned high = chunk_bits(rows.size());
  const std::size_t low = rows.size() - high;
  const auto chunks = static_cast<std::int64_t>(std::uint64_t{1} << high);
  std::vector<std::uint64_t> counts(max_weight + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(max_weight + 1, 0);
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) census_range(rows, low, static_cast<std::uint64_t>(c), fold, local);
#pragma omp critical(cosetforge_span_census)
    for (std::size_t w = 0; w <= max_weight; ++w) counts[w] += local[w];
  }
  return counts;
}

std::vector<std::vector<std::uint64_t>> coset_weight_censuses(std::span<const std::uint64_t> rows,
                                                              std::span<const std::uint64_t> offsets, WeightFold fold,
                                                              std::size_t max_weight) {
  std::vector<std::vector<std::uint64_t>> out(offsets.size(), std::vector<std::uint64_t>(max_weight + 1, 0));
  const auto count = static_cast<std::int64_t>(offsets.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) census_range(rows, rows.size(), 0, fold, out[i], offsets[i]);
  return out;
}

SyndromeSweep syndrome_sweep(std::span<const std::uint64_t> unit_syndromes, unsigned syndrome_bits, WeightFold fold,
                             std::size_t max_weight) {
  check_sweep_input(unit_syndromes, syndrome_bits, max_weight);
  const std::size_t syndromes = std::size_t{1} << syndrome_bits;
  const unsigned high = chunk_bits(unit_syndromes.size());
  const std::size_t low = unit_syndromes.size() - high;
  const auto chunks = static_cast<std::int64_t>(std::uint64_t{1} << high);
  SweepState total(syndromes, max_weight);
#pragma omp parallel
  {
    SweepState local(syndromes, max_weight);
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      sweep_range(unit_syndromes, low, static_cast<std::uint64_t>(c), fold, max_weight, local);
    }
#pragma omp critical(cosetforge_sweep)
    merge_sweep(total, local);
  }
  return {max_weight, std::move(total.leader_weight), std::move(total.leader), std::move(total.histogram)};
}

void fwht(std::span<std::int64_t> data) {
  const std::size_t n = data.size();
  const auto half = static_cast<std::int64_t>(n / 2);
  for (std::size_t h = 1; h < n; h <<= 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < half; ++b) {
      const std::size_t j = (static_cast<std::size_t>(b) / h) * 2 * h + static_cast<std::size_t>(b) % h;
      const std::int64_t x = data[j], y = data[j + h];
      data[j] = x + y;
      data[j + h] = x - y;
    }
  }
}

DistanceRegularityCensus distance_regularity_census(CsrView graph) {
  const auto n = static_cast<std::int64_t>(graph.vertex_count());
  std::vector<SourceCensus> per_source(graph.vertex_count());
#pragma omp parallel
  {
    std::vector<int> dist;
    std::vector<std::uint32_t> queue;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t u = 0; u < n; ++u) {
      per_source[u] = census_from(graph, static_cast<std::uint32_t>(u), dist, queue);
    }
  }
  return merge_census(per_source);
}

CommonNeighborCensus common_neighbor_census(RowView rows) {
  const auto n = static_cast<std::int64_t>(rows.vertex_count);
  std::vector<CommonNeighborCensus> per_source(rows.vertex_count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t u = 0; u < n; ++u) census_pairs_from(rows, static_cast<std::size_t>(u), per_source[u]);
  CommonNeighborCensus cn;
  for (const auto& part : per_source) merge_pairs(cn, part);
  return cn;
}

std::vector<std::uint64_t> distance_k_rows(CsrView graph, std::size_t k, std::size_t words_per_row) {
  std::vector<std::uint64_t> bits(graph.vertex_count() * words_per_row, 0);
  const auto n = static_cast<std::int64_t>(graph.vertex_count());
#pragma omp parallel
  {
    std::vector<int> dist;
    std::vector<std::uint32_t> queue;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t u = 0; u < n; ++u) {
      distance_row(graph, static_cast<std::uint32_t>(u), k, dist, queue,
                   bits.data() + static_cast<std::size_t>(u) * words_per_row);
    }
  }
  return bits;
}

std::vector<std::vector<std::int64_t>> signed_weight_sums(std::span<const std::uint64_t> words, WeightFold fold,
                                                          std::span<const std::uint64_t> offsets, std::size_t max_weight) {
  const auto weights = word_weights(words, fold);
  std::vector<std::vector<std::int64_t>> out(offsets.size(), std::vector<std::int64_t>(max_weight + 1, 0));
  const auto count = static_cast<std::int64_t>(offsets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) signed_sums_for(words, weights, offsets[i], out[i]);
  return out;
}

}  // namespace parallel

}  // namespace cosetforge::kernels
