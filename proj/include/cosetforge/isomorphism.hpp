#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cosetforge/graph.hpp"

namespace cosetforge {

enum class IsoVerdict { yes, no, unknown };

std::string to_string(IsoVerdict v);

struct IsomorphismResult {
  IsoVerdict verdict = IsoVerdict::unknown;
  /// For yes: vertex v of the first graph maps to mapping[v].
  std::vector<std::uint32_t> mapping;
  /// For no: the invariant or search that separated the graphs.
  std::string witness;
};

/// Three-valued isomorphism test. Cheap invariants first, then joint colour
/// refinement, then individualisation-refinement backtracking. Answers "no"
/// only on a differing isomorphism invariant or an exhausted search, and
/// "unknown" when the budget runs out.
IsomorphismResult isomorphic(const Graph& g1, const Graph& g2, std::chrono::milliseconds budget);

/// Isomorphism invariant: the sorted multiset, over all sequences of
/// `depth` distinct individualised vertices, of the equitable partition
/// (cell sizes and quotient matrix) reached by colour refinement.
std::vector<std::vector<std::uint64_t>> individualization_invariant(const Graph& g, unsigned depth);

struct LinearEquivalence {
  IsoVerdict verdict = IsoVerdict::unknown;
  /// Images of the unit vectors e_0..e_{m-1} under L (yes only).
  std::vector<std::uint32_t> columns;

  std::uint32_t apply(std::uint32_t x) const;
};

/// Searches for an invertible GF(2)-linear L on Z_2^m with L(first) = second.
/// Backtracks over images of a basis drawn from `first`, pruning whenever an
/// element of `first` in the current span would map outside `second`, or the
/// spans meet the two sets in different numbers of points.
LinearEquivalence linear_cayley_equivalence(unsigned m, std::span<const std::uint32_t> first,
                                            std::span<const std::uint32_t> second, std::chrono::milliseconds budget);

}  // namespace cosetforge
