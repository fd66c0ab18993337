#pragma once

// Hot loops of the library. Every kernel exists twice: a plain serial
// version kept as the reference, and an OpenMP version used by the public
// operations. Both must return identical results for identical input.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "cosetforge/gf4.hpp"

namespace cosetforge::kernels {

/// Weight of a packed word. Quaternary words fold the b-part onto the
/// a-part (shift = n); binary words use shift = 0.
struct WeightFold {
  unsigned shift = 0;
  std::uint64_t mask = ~std::uint64_t{0};

  unsigned weight(std::uint64_t v) const {
    return static_cast<unsigned>(std::popcount((v | (v >> shift)) & mask));
  }
};

inline WeightFold quaternary_fold(std::size_t n) { return {static_cast<unsigned>(n), low_mask(n)}; }
inline WeightFold binary_fold(std::size_t n) { return {0, low_mask(n)}; }

/// Result of sweeping every packed ambient vector and bucketing it by syndrome.
struct SyndromeSweep {
  std::size_t max_weight = 0;
  /// Minimum weight per syndrome; 0xff marks an unreached syndrome.
  std::vector<std::uint8_t> leader_weight;
  /// Packed leader, the minimum of (weight, packed value) within the coset.
  std::vector<std::uint64_t> leader;
  /// histogram[s * (max_weight + 1) + w] = vectors of weight w with syndrome s.
  std::vector<std::uint64_t> histogram;
};

/// Compressed adjacency of an undirected graph.
struct CsrView {
  std::span<const std::uint32_t> offsets;    // size vertex_count + 1
  std::span<const std::uint32_t> neighbors;  // sorted per vertex

  std::size_t vertex_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const std::uint32_t> of(std::size_t v) const {
    return neighbors.subspan(offsets[v], offsets[v + 1] - offsets[v]);
  }
};

/// Packed adjacency rows.
struct RowView {
  std::span<const std::uint64_t> bits;
  std::size_t vertex_count = 0;
  std::size_t words_per_row = 0;

  std::span<const std::uint64_t> row(std::size_t v) const {
    return bits.subspan(v * words_per_row, words_per_row);
  }
};

struct PairWitness {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint32_t distance = 0;
};

/// Per-layer counts b_i = |G(v) ∩ G_{i+1}(u)| and c_i = |G(v) ∩ G_{i-1}(u)|
/// observed over all ordered pairs, or the first pair that breaks constancy.
struct DistanceRegularityCensus {
  bool connected = true;
  std::vector<std::uint64_t> b;  // b[i] for i = 0..d
  std::vector<std::uint64_t> c;  // c[i] for i = 0..d (c[0] = 0)
  std::optional<PairWitness> violation;
};

/// Common-neighbour counts over adjacent and non-adjacent unordered pairs.
struct CommonNeighborCensus {
  std::uint64_t adjacent_pairs = 0;
  std::uint64_t nonadjacent_pairs = 0;
  std::uint64_t adjacent_min = ~std::uint64_t{0}, adjacent_max = 0;
  std::uint64_t nonadjacent_min = ~std::uint64_t{0}, nonadjacent_max = 0;
  PairWitness adjacent_min_at, adjacent_max_at, nonadjacent_min_at, nonadjacent_max_at;
};

namespace serial {

std::vector<std::uint64_t> span_weight_census(std::span<const std::uint64_t> rows, WeightFold fold,
                                              std::size_t max_weight);
/// Weight census of each translate offsets[i] + span(rows).
std::vector<std::vector<std::uint64_t>> coset_weight_censuses(std::span<const std::uint64_t> rows,
                                                              std::span<const std::uint64_t> offsets, WeightFold fold,
                                                              std::size_t max_weight);
SyndromeSweep syndrome_sweep(std::span<const std::uint64_t> unit_syndromes, unsigned syndrome_bits,
                             WeightFold fold, std::size_t max_weight);
void fwht(std::span<std::int64_t> data);
DistanceRegularityCensus distance_regularity_census(CsrView graph);
CommonNeighborCensus common_neighbor_census(RowView rows);
/// Packed rows of the graph joining vertices at distance exactly k.
std::vector<std::uint64_t> distance_k_rows(CsrView graph, std::size_t k, std::size_t words_per_row);

/// out[i][w] = sum over words u of weight w of (-1)^<offsets[i], u>.
std::vector<std::vector<std::int64_t>> signed_weight_sums(std::span<const std::uint64_t> words, WeightFold fold,
                                                          std::span<const std::uint64_t> offsets, std::size_t max_weight);

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> span_weight_census(std::span<const std::uint64_t> rows, WeightFold fold,
                                              std::size_t max_weight);
/// Weight census of each translate offsets[i] + span(rows).
std::vector<std::vector<std::uint64_t>> coset_weight_censuses(std::span<const std::uint64_t> rows,
                                                              std::span<const std::uint64_t> offsets, WeightFold fold,
                                                              std::size_t max_weight);
SyndromeSweep syndrome_sweep(std::span<const std::uint64_t> unit_syndromes, unsigned syndrome_bits,
                             WeightFold fold, std::size_t max_weight);
void fwht(std::span<std::int64_t> data);
DistanceRegularityCensus distance_regularity_census(CsrView graph);
CommonNeighborCensus common_neighbor_census(RowView rows);
std::vector<std::uint64_t> distance_k_rows(CsrView graph, std::size_t k, std::size_t words_per_row);
std::vector<std::vector<std::int64_t>> signed_weight_sums(std::span<const std::uint64_t> words, WeightFold fold,
                                                          std::span<const std::uint64_t> offsets, std::size_t max_weight);

}  // namespace parallel

/// Breadth-first distances from source; unreachable vertices get -1.
void bfs_distances(CsrView graph, std::uint32_t source, std::vector<int>& dist, std::vector<std::uint32_t>& queue);

/// Fixed points and order of one permutation in a list.
struct FixedPointScan {
  std::uint64_t order = 1;
  std::vector<std::uint32_t> fixed;
};

/// `Perm` must provide size() and operator()(i) returning the image of i.
template <class Perm>
FixedPointScan scan_permutation(const Perm& p) {
  FixedPointScan out;
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    do {
      seen[j] = true;
      j = p(j);
      ++len;
    } while (j != i);
    if (len == 1) out.fixed.push_back(static_cast<std::uint32_t>(i));
    out.order = std::lcm(out.order, len);
  }
  return out;
}

namespace serial {
template <class Perm>
std::vector<FixedPointScan> scan_permutations(std::span<const Perm> elements) {
  std::vector<FixedPointScan> out(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) out[i] = scan_permutation(elements[i]);
  return out;
}
}  // namespace serial

namespace parallel {
template <class Perm>
std::vector<FixedPointScan> scan_permutations(std::span<const Perm> elements) {
  std::vector<FixedPointScan> out(elements.size());
  const auto count = static_cast<std::int64_t>(elements.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < count; ++i) out[i] = scan_permutation(elements[i]);
  return out;
}
}  // namespace parallel

}  // namespace cosetforge::kernels
