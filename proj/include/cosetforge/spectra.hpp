#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cosetforge/gf4.hpp"
#include "cosetforge/graph.hpp"
#include "cosetforge/weight_distribution.hpp"

namespace cosetforge {

/// Eigenvalues with multiplicities, descending by eigenvalue.
class Spectrum {
 public:
  Spectrum() = default;
  /// Merges repeated eigenvalues and sorts.
  explicit Spectrum(std::vector<std::pair<std::int64_t, std::uint64_t>> pairs);
  static Spectrum from_values(std::span<const std::int64_t> values);

  const std::vector<std::pair<std::int64_t, std::uint64_t>>& pairs() const { return pairs_; }
  std::size_t distinct() const { return pairs_.size(); }
  std::uint64_t multiplicity(std::int64_t eigenvalue) const;
  std::uint64_t total_multiplicity() const;
  /// Sum of eigenvalue * multiplicity (the trace of A).
  std::int64_t trace() const;
  /// Sum of eigenvalue^2 * multiplicity (the trace of A^2).
  std::int64_t trace_of_square() const;
  /// trace() == 0 and trace_of_square() == 2 * edges, with the right vertex count.
  bool satisfies_trace_identities(std::size_t vertex_count, std::size_t edge_count) const;
  /// "{33^1,9^198,1^495,-7^330}"
  std::string to_string() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<std::pair<std::int64_t, std::uint64_t>> pairs_;
};

/// sums[x] = sum over s in S of (-1)^<x,s>, for every x in Z_2^m.
std::vector<std::int64_t> character_sums(unsigned m, std::span<const std::uint32_t> connecting_set);

/// Spectrum of the Cayley graph on Z_2^m by a Walsh-Hadamard transform.
/// Throws InvalidArgument on an empty set, 0, duplicates or out-of-range elements.
Spectrum wht_spectrum(unsigned m, std::span<const std::uint32_t> connecting_set);

/// {(3n - 4i)^{A_i}} from the dual weight distribution of a length-n code.
Spectrum spectrum_from_dual_weights(std::size_t n, const WeightDistribution& dual);

/// Parameters of a connected SRG from its three eigenvalues k > r > s.
/// Throws NotStronglyRegular for any other number of distinct eigenvalues.
SrgParams srg_params_from_spectrum(const Spectrum& spectrum);

/// Commutative translation scheme on an elementary abelian 2-group.
struct AssociationSchemeData {
  std::size_t point_count = 0;
  /// k_0..k_d
  std::vector<std::uint64_t> valencies;
  /// m_0..m_d, aligned with the rows of p.
  std::vector<std::uint64_t> multiplicities;
  /// p[i][j]: eigenvalue of relation j on eigenspace i. Rows are sorted by
  /// column 1 descending, so row 0 is the trivial character.
  std::vector<std::vector<std::int64_t>> p;
  /// Group elements (as Z_2^m integers) in relation j with 0.
  std::vector<std::vector<std::uint32_t>> relation_sets;
  unsigned group_rank = 0;

  std::size_t classes() const { return valencies.empty() ? 0 : valencies.size() - 1; }
};

/// Scheme of distances of a distance-regular Cayley graph on Z_2^m. Throws
/// NotDistanceRegular or Disconnected as drg_check does.
AssociationSchemeData scheme_from_cayley_drg(unsigned m, std::span<const std::uint32_t> connecting_set);

/// Relations x R_i y iff wt(x + y) is the i-th smallest weight. The group is
/// coordinatised by the canonical GF(2) basis of the codewords. Throws
/// InvalidArgument if the words do not form a group and NotAScheme with a
/// witness triple if an intersection number varies.
AssociationSchemeData distance_scheme_on_code(std::span<const Gf4Vec> codewords);
AssociationSchemeData distance_scheme_on_code(std::span<const BitVec> codewords);

/// Cayley graph of relation j of a translation scheme.
Graph relation_graph(const AssociationSchemeData& scheme, std::size_t j);

struct DualityCheck {
  bool ok = false;
  std::string detail;
};

/// Checks first.p * second.p == |X| I and that the multiplicities of each
/// scheme are the valencies of the other.
DualityCheck verify_duality(const AssociationSchemeData& first, const AssociationSchemeData& second);

}  // namespace cosetforge
