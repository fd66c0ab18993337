#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cosetforge {

/// Fully reduced row-echelon basis of a subspace of GF(2)^width, width <= 64.
/// Rows are kept sorted by pivot (highest set bit) in descending order, which
/// makes the basis a canonical form of the subspace.
class Gf2Basis {
 public:
  Gf2Basis() = default;
  explicit Gf2Basis(std::span<const std::uint64_t> vectors);

  /// Adds v to the spanning set; returns false if v was already in the span.
  bool insert(std::uint64_t v);
  std::uint64_t reduce(std::uint64_t v) const;
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }

  /// Coordinates of v relative to rows(): bit i set iff rows()[i] is used.
  std::optional<std::uint64_t> coordinates(std::uint64_t v) const;
  /// XOR of the rows selected by the bits of coords.
  std::uint64_t combine(std::uint64_t coords) const;

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  std::vector<unsigned> pivots() const;

  friend bool operator==(const Gf2Basis&, const Gf2Basis&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

/// Basis of { v : parity(v & r) = 0 for every r in rows } inside GF(2)^width.
std::vector<std::uint64_t> gf2_nullspace(std::span<const std::uint64_t> rows, std::size_t width);

inline bool parity(std::uint64_t v) { return __builtin_parityll(v) != 0; }

}  // namespace cosetforge
