#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/coset_analysis.hpp"
#include "cosetforge/gf4.hpp"
#include "cosetforge/graph.hpp"
#include "cosetforge/weight_distribution.hpp"

namespace cosetforge {

/// Binary linear code of length n <= 64.
///
/// Generators are kept in reduced row-echelon form. The check rows are either
/// the canonical basis of the dual, or, for a code defined by its check
/// matrix, the given rows in their given order; syndromes use that order.
class BinaryLinearCode {
 public:
  BinaryLinearCode() = default;
  static BinaryLinearCode from_generators(std::size_t n, std::span<const BitVec> rows);
  /// Code = { x : <h, x> = 0 for every row h }. Rows must be independent.
  static BinaryLinearCode from_check_rows(std::size_t n, std::span<const BitVec> rows);

  std::size_t length() const { return n_; }
  std::size_t dimension() const { return generators_.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << dimension(); }
  const std::vector<BitVec>& generators() const { return generators_; }
  const std::vector<BitVec>& check_rows() const { return check_rows_; }
  bool contains(const BitVec& x) const;
  /// Bit i is <check_rows()[i], x>.
  std::uint32_t syndrome(const BitVec& x) const;
  /// Throws BudgetExceeded above 2^kMaxEnumerationRank words.
  std::vector<BitVec> codewords() const;
  /// Generators and check rows swap roles.
  BinaryLinearCode dual() const;

  friend bool operator==(const BinaryLinearCode& x, const BinaryLinearCode& y) {
    return x.n_ == y.n_ && x.generators_ == y.generators_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<BitVec> generators_;
  std::vector<BitVec> check_rows_;
};

/// phi(a + bw) = (b, a + b, a) per coordinate; length 3n, n <= 21.
BitVec phi_map(const Gf4Vec& x);

/// Binary code whose check rows are phi of the canonical check rows of Q,
/// in the same order, so syndromes agree bit for bit with those of Q.
BinaryLinearCode phi_dual_construction(const AdditiveCode& q);

/// Weight-preserving lift of a quaternary vector to a binary vector with the
/// same syndrome under phi_dual_construction: symbol 1 at j goes to 3j,
/// w to 3j + 2, w^2 to 3j + 1.
BitVec lift_leader(const Gf4Vec& x);

WeightDistribution binary_weight_distribution(const BinaryLinearCode& code);
std::size_t minimum_distance(const BinaryLinearCode& code);
/// Number of nonzero weights in the dual.
std::size_t external_distance(const BinaryLinearCode& code);

/// Binary Krawtchouk value K_j(i) for length n.
std::int64_t krawtchouk(std::size_t n, std::size_t j, std::size_t i);

/// Weight distribution of the dual of a code of length n with distribution
/// wd and code_size words. Throws InvalidArgument if wd does not sum to
/// code_size and NonIntegralSolution if a coefficient is not an integer.
WeightDistribution macwilliams_binary(const WeightDistribution& wd, std::size_t n, std::uint64_t code_size);

/// Cayley graph on syndromes with the columns of the check matrix as
/// connecting set; throws MinDistanceTooSmall on a zero or repeated column.
Graph binary_coset_graph(const BinaryLinearCode& code);

/// Coset weight distributions from the dual code by character sums.
class DualCosetEnumerator {
 public:
  /// Throws BudgetExceeded when the dual has more than 2^20 words.
  explicit DualCosetEnumerator(const BinaryLinearCode& code);
  WeightDistribution distribution(const BitVec& representative) const;
  std::vector<WeightDistribution> distributions(std::span<const BitVec> representatives) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> dual_words_;
  std::vector<std::vector<std::int64_t>> kernel_;  // kernel_[w][j] = K_j(w)
};

WeightDistribution coset_enumerator_via_dual(const BinaryLinearCode& code, const BitVec& representative);

/// Direct enumeration of representative + code (used as the oracle).
WeightDistribution brute_force_coset_distribution(const BinaryLinearCode& code, const BitVec& representative);

/// Profiles of every coset of phi_dual_construction(q), one per quaternary
/// syndrome, with representatives lifted from the quaternary leaders.
std::vector<CosetProfile> lifted_coset_profiles(const BinaryLinearCode& code, const SyndromeTable& table);

/// Builds psi(Q) from the symbol-to-antipodal-pair table and checks
/// psi(Q)^perp == phi(Q^perp) by exhaustion. Throws BudgetExceeded for n > 4.
bool verify_psi_diagram(const AdditiveCode& q);

}  // namespace cosetforge
