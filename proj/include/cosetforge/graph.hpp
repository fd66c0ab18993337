#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/kernels.hpp"

namespace cosetforge {

/// Dense adjacency grows as n^2 bits; 2^15 vertices is 128 MiB.
inline constexpr std::size_t kMaxGraphVertices = std::size_t{1} << 15;

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Simple undirected graph with packed adjacency rows and a CSR neighbour list.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on loops or out-of-range endpoints; duplicate edges collapse.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
  /// Rows must be symmetric with a zero diagonal.
  static Graph from_rows(std::size_t vertex_count, std::vector<std::uint64_t> rows);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  std::size_t words_per_row() const { return words_; }
  std::size_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1; }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return std::span<const std::uint32_t>(neighbors_).subspan(offsets_[v], degree(v));
  }
  std::span<const std::uint64_t> row(std::uint32_t v) const {
    return std::span<const std::uint64_t>(rows_).subspan(v * words_, words_);
  }
  /// Sorted (u, v) pairs with u < v.
  std::vector<Edge> edges() const;
  std::optional<std::size_t> regular_degree() const;
  bool is_connected() const;
  /// Subgraph induced on the listed vertices, relabelled 0..k-1 in list order.
  Graph induced(std::span<const std::uint32_t> vertices) const;
  /// Relabelled copy: vertex v becomes mapping[v].
  Graph relabelled(std::span<const std::uint32_t> mapping) const;

  kernels::CsrView csr() const { return {offsets_, neighbors_}; }
  kernels::RowView rows() const { return {rows_, n_, words_}; }

  friend bool operator==(const Graph& x, const Graph& y) { return x.n_ == y.n_ && x.rows_ == y.rows_; }

 private:
  void build_csr();

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> neighbors_;
};

/// Cayley graph on Z_2^m: u ~ v iff u XOR v is in the connecting set.
/// Throws InvalidArgument for 0, duplicates, or elements outside Z_2^m.
Graph cayley_graph_z2(unsigned m, std::span<const std::uint32_t> connecting_set);
Graph cayley_graph_z2(unsigned m, std::span<const BitVec> connecting_set);

/// Syndromes of the 3n weight-1 vectors in the order (1, w, w^2) per
/// coordinate; throws MinDistanceTooSmall unless they are nonzero and distinct.
std::vector<std::uint32_t> coset_connecting_set(const AdditiveCode& code);
/// Vertices are syndrome integers under the canonical check rows. The full
/// space has a single coset and gives the one-vertex graph.
Graph coset_graph(const AdditiveCode& code);

/// H(n, q): vertex index sum x_i q^i, adjacent at Hamming distance 1.
Graph hamming_graph(std::size_t n, std::size_t q);

/// BFS layers from v; throws Disconnected if some vertex is unreachable.
std::vector<std::vector<std::uint32_t>> distance_partition(const Graph& g, std::uint32_t v);
std::vector<std::size_t> successive_degrees(const Graph& g, std::uint32_t v);

struct IntersectionArray {
  std::vector<std::uint64_t> b;  // b_0 .. b_{d-1}
  std::vector<std::uint64_t> c;  // c_1 .. c_d

  std::size_t diameter() const { return c.size(); }
  /// k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}; empty if a quotient is not integral.
  std::vector<std::uint64_t> valencies() const;
  /// "{33,30,15;1,2,15}"
  std::string to_string() const;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Throws Disconnected, or NotDistanceRegular with a witness pair.
IntersectionArray drg_check(const Graph& g);

struct SrgParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  /// Absent for complete graphs, which have no non-adjacent pairs.
  std::optional<std::uint64_t> mu;

  bool feasible() const;
  std::string to_string() const;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Throws NotStronglyRegular when the graph is not regular or the
/// common-neighbour counts vary; Disconnected when it is disconnected.
SrgParams srg_check(const Graph& g);

/// u ~ v iff dist(u, v) = k.
Graph distance_k_graph(const Graph& g, std::size_t k);

/// Diameter of a connected graph.
std::size_t diameter(const Graph& g);

}  // namespace cosetforge
