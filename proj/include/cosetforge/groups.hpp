#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/coset_analysis.hpp"
#include "cosetforge/graph.hpp"

namespace cosetforge {

/// Permutation of 0..n-1, n <= 65536. Composition p * q applies p first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless images is a bijection.
  explicit Permutation(std::vector<std::uint16_t> images);
  static Permutation identity(std::size_t n);
  /// Disjoint cycles over points 1..n, e.g. "(1 4 27)(13,27)"; separators
  /// inside a cycle may be spaces or commas.
  static Permutation from_cycles(std::size_t n, std::string_view text);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const { return images_; }
  bool is_identity() const;
  std::uint64_t order() const;
  Permutation inverse() const;
  /// 1-based cycle notation without fixed points; "()" for the identity.
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& first, const Permutation& then);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

struct PermGroup {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Order by Schreier-Sims.
std::uint64_t group_order(const PermGroup& group);

/// Action on the 3n weight-1 words, numbered 3j + t for symbol (1, w, w^2)[t]
/// at coordinate j.
Permutation monomial_to_weight1_perm(const MonomialMap& m);

/// Action on syndromes induced by x -> m(x); throws NotAStabilizer unless m
/// maps the code onto itself.
Permutation monomial_to_vertex_perm(const MonomialMap& m, const AdditiveCode& code, const SyndromeTable& table);

/// v -> v XOR e_i on Z_2^m for i = 0..m-1.
std::vector<Permutation> translation_generators(unsigned m);

/// Every element generated, in breadth-first order from the identity.
/// Throws LimitExceeded once more than `limit` elements are found.
std::vector<Permutation> graph_group_closure(std::span<const Permutation> generators, std::size_t limit = 1000000);

/// Orbits of the group generated by `generators` on its points, each sorted,
/// listed by smallest element.
std::vector<std::vector<std::uint32_t>> point_orbits(std::span<const Permutation> generators);

/// Orbits on the edges of g; each edge is (u, v) with u < v.
std::vector<std::vector<Edge>> edge_orbits(std::span<const Permutation> generators, const Graph& g);

bool is_automorphism(const Permutation& p, const Graph& g);

std::size_t vertex_stabilizer_order(std::span<const Permutation> elements, std::uint32_t v);

/// Structural invariants of a small explicitly listed group.
struct GroupCensus {
  std::uint64_t order = 0;
  /// element order -> number of elements
  std::map<std::uint64_t, std::uint64_t> order_census;
  bool abelian = false;
  /// Elements of 3-power order, when they form a subgroup (normal Sylow 3-subgroup).
  std::uint64_t sylow3_order = 0;
  bool sylow3_is_subgroup = false;
  bool sylow3_abelian = false;
  std::uint64_t sylow3_exponent = 0;
};

GroupCensus group_census(std::span<const Permutation> elements);

/// Invariants expected of (C_9 x| C_3) x| C_2: order 54, nonabelian, orders
/// within {1,2,3,6,9} with 9 present, Sylow 3-subgroup of order 27,
/// nonabelian, of exponent 9.
bool matches_c9_c3_c2(const GroupCensus& census);

enum class FixedSubgraphClass {
  whole_graph,
  null_graph,
  eight_k4,
  edge_free_4,
  hamming_2_4,
  edge_free_2,
  single_vertex,
  k4,
};

std::string to_string(FixedSubgraphClass c);

/// Identifies an induced fixed subgraph of `whole` (with fixed_count vertices)
/// against the eight known shapes; throws UnclassifiedSubgraph otherwise.
FixedSubgraphClass classify_fixed_subgraph(const Graph& fixed, std::size_t whole_vertex_count,
                                           std::chrono::milliseconds budget = std::chrono::milliseconds(10000));

using FixedSubgraphCase = std::pair<std::uint64_t, FixedSubgraphClass>;

/// (element order, class) pairs observed over all elements, with counts.
std::map<FixedSubgraphCase, std::uint64_t> fixed_subgraph_classification(std::span<const Permutation> elements,
                                                                         const Graph& g);

}  // namespace cosetforge
