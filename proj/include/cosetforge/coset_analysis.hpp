#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/gf4.hpp"
#include "cosetforge/weight_distribution.hpp"

namespace cosetforge {

/// Largest ambient space swept by build_syndrome_table (4^n vectors).
inline constexpr std::size_t kMaxAmbientBits = 24;

/// Syndromes of every ambient vector with respect to the canonical check rows.
///
/// Bit i of a syndrome is trace_ip(check_rows()[i], x), where the check rows
/// are the canonical basis of the trace dual. Syndromes are stored as
/// integers with bit 0 for the first check row.
class SyndromeTable {
 public:
  SyndromeTable() = default;
  SyndromeTable(std::size_t length, std::vector<Gf4Vec> check_rows, std::vector<std::uint8_t> leader_weight,
                std::vector<Gf4Vec> leaders, std::vector<std::uint64_t> histogram);

  std::size_t length() const { return n_; }
  const std::vector<Gf4Vec>& check_rows() const { return check_rows_; }
  unsigned syndrome_bits() const { return static_cast<unsigned>(check_rows_.size()); }
  std::size_t coset_count() const { return leader_weight_.size(); }

  std::uint32_t syndrome(const Gf4Vec& x) const;
  std::size_t leader_weight(std::uint32_t s) const { return leader_weight_.at(s); }
  const Gf4Vec& leader(std::uint32_t s) const { return leaders_.at(s); }
  std::size_t covering_radius() const;
  /// census[w] = number of cosets of weight w.
  std::vector<std::uint64_t> weight_census() const;
  /// Weight distribution of coset s read off the ambient sweep.
  WeightDistribution swept_distribution(std::uint32_t s) const;

 private:
  std::size_t n_ = 0;
  std::vector<Gf4Vec> check_rows_;
  std::vector<std::uint8_t> leader_weight_;
  std::vector<Gf4Vec> leaders_;
  std::vector<std::uint64_t> histogram_;
};

/// Sweeps all 4^n ambient vectors; throws BudgetExceeded when 2n > kMaxAmbientBits.
SyndromeTable build_syndrome_table(const AdditiveCode& code);

struct CosetProfile {
  BitVec syndrome;
  std::size_t coset_weight = 0;
  WeightDistribution distribution;
};

/// Distribution of {leader + c : c in code} for every syndrome, in syndrome order.
std::vector<CosetProfile> coset_profiles(const AdditiveCode& code, const SyndromeTable& table);

/// Equal coset weight implies equal distribution.
bool is_completely_regular(std::span<const CosetProfile> profiles);

struct PackingConstants {
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
  friend bool operator==(const PackingConstants&, const PackingConstants&) = default;
};

/// Reads the number of codewords at distance e + 1 from each coset, with
/// e = (d - 1) / 2; throws NotUniformlyPacked naming two disagreeing cosets.
PackingConstants uniformly_packed_check(std::size_t minimum_distance, std::span<const CosetProfile> profiles);
PackingConstants uniformly_packed_check(const AdditiveCode& code, std::span<const CosetProfile> profiles);

/// Solves the double-counting relations for (lambda, mu) of a uniformly
/// packed code of distance 2e + 1 from A_{2e+1} and A_{2e+2}; throws
/// NonIntegralSolution if the exact solution is not a pair of integers.
PackingConstants lemma_lambda_mu(std::uint64_t n, std::uint64_t q, std::uint64_t e, std::uint64_t a_odd,
                                 std::uint64_t a_even);

struct BzzParameters {
  std::uint64_t n = 0;
  std::uint64_t redundancy = 0;
  std::uint64_t e = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
  friend bool operator==(const BzzParameters&, const BzzParameters&) = default;
};

/// Parameters of the quaternary uniformly packed family indexed by m >= 2.
BzzParameters bzz_parameters(std::uint64_t m);

/// Exact binomial coefficient; throws InvalidArgument on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace cosetforge
