#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cosetforge/gf2.hpp"
#include "cosetforge/gf4.hpp"
#include "cosetforge/weight_distribution.hpp"

namespace cosetforge {

/// Largest span enumerated by weight_distribution and friends.
inline constexpr std::size_t kMaxEnumerationRank = 24;

/// Additive quaternary code: the GF(2)-span of its generator rows.
///
/// Two generator sets are kept: the independent input rows in their input
/// order (generators()), and the fully reduced row-echelon basis of the
/// packed 2n-bit words (canonical_basis()), on which equality is syntactic.
class AdditiveCode {
 public:
  AdditiveCode() = default;

  /// Throws LengthMismatch if a row is not of length n.
  static AdditiveCode from_generators(std::size_t n, std::span<const Gf4Vec> rows);
  static AdditiveCode from_generators(std::span<const Gf4Vec> rows);
  static AdditiveCode zero_code(std::size_t n);
  static AdditiveCode full_space(std::size_t n);

  std::size_t length() const { return n_; }
  /// Number r of GF(2)-independent generators; the code has 2^r words.
  std::size_t rank() const { return basis_.rank(); }
  std::uint64_t size() const { return std::uint64_t{1} << rank(); }

  const std::vector<Gf4Vec>& generators() const { return generators_; }
  std::vector<Gf4Vec> canonical_basis() const;
  const Gf2Basis& packed_basis() const { return basis_; }

  bool contains(const Gf4Vec& x) const;
  /// All 2^r codewords; throws BudgetExceeded above 2^kMaxEnumerationRank.
  std::vector<Gf4Vec> codewords() const;

  friend bool operator==(const AdditiveCode& x, const AdditiveCode& y) {
    return x.n_ == y.n_ && x.basis_ == y.basis_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Gf4Vec> generators_;
  Gf2Basis basis_;
};

AdditiveCode cyclic_additive_code(const Gf4Vec& word);
/// Projection onto the other n - 1 coordinates.
AdditiveCode puncture(const AdditiveCode& code, std::size_t position);
/// Dual under the trace inner product, by GF(2) nullspace of the symplectic system.
AdditiveCode trace_dual(const AdditiveCode& code);

WeightDistribution weight_distribution(const AdditiveCode& code);
/// Smallest nonzero weight; 0 for the zero code.
std::size_t minimum_distance(const AdditiveCode& code);
/// Number of distinct nonzero weights of trace_dual(code).
std::size_t external_distance(const AdditiveCode& code);
/// True iff the code is closed under multiplication by w.
bool is_linear(const AdditiveCode& code);

/// Monomial map y_i = scale[i] * x_{source[i]}; as a matrix acting on column
/// vectors, row i has its single nonzero entry scale[i] in column source[i].
class MonomialMap {
 public:
  MonomialMap() = default;
  /// Throws InvalidArgument unless source is a permutation and scales are nonzero.
  MonomialMap(std::vector<std::size_t> source, std::vector<Gf4> scale);
  static MonomialMap identity(std::size_t n);
  /// Throws InvalidArgument if the matrix is not monomial.
  static MonomialMap from_matrix(const std::vector<std::vector<Gf4>>& rows);

  std::size_t size() const { return source_.size(); }
  std::size_t source(std::size_t i) const { return source_[i]; }
  Gf4 scale(std::size_t i) const { return scale_[i]; }

  Gf4Vec apply(const Gf4Vec& x) const;
  MonomialMap then(const MonomialMap& next) const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  std::vector<std::size_t> source_;
  std::vector<Gf4> scale_;
};

AdditiveCode apply_monomial(const AdditiveCode& code, const MonomialMap& m);
bool stabilizes(const AdditiveCode& code, const MonomialMap& m);

}  // namespace cosetforge
