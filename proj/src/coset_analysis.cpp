#include "cosetforge/coset_analysis.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cosetforge/error.hpp"
#include "cosetforge/kernels.hpp"

namespace cosetforge {

namespace {

using Wide = __int128;

std::string describe(const CosetProfile& p) {
  return "coset " + p.syndrome.to_string() + " (weight " + std::to_string(p.coset_weight) + ")";
}

Wide checked_power(std::uint64_t base, std::uint64_t exp) {
  Wide r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > (Wide{1} << 100)) throw InvalidArgument("power too large");
  }
  return r;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > static_cast<Wide>(~std::uint64_t{0})) throw InvalidArgument("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

SyndromeTable::SyndromeTable(std::size_t length, std::vector<Gf4Vec> check_rows, std::vector<std::uint8_t> leader_weight,
                             std::vector<Gf4Vec> leaders, std::vector<std::uint64_t> histogram)
    : n_(length),
      check_rows_(std::move(check_rows)),
      leader_weight_(std::move(leader_weight)),
      leaders_(std::move(leaders)),
      histogram_(std::move(histogram)) {}

std::uint32_t SyndromeTable::syndrome(const Gf4Vec& x) const {
  return static_cast<std::uint32_t>(star_product(check_rows_, x).bits());
}

std::size_t SyndromeTable::covering_radius() const {
  return leader_weight_.empty() ? 0 : *std::max_element(leader_weight_.begin(), leader_weight_.end());
}

std::vector<std::uint64_t> SyndromeTable::weight_census() const {
  std::vector<std::uint64_t> census(covering_radius() + 1, 0);
  for (auto w : leader_weight_) ++census[w];
  return census;
}

WeightDistribution SyndromeTable::swept_distribution(std::uint32_t s) const {
  const auto begin = histogram_.begin() + static_cast<std::ptrdiff_t>(s * (n_ + 1));
  return WeightDistribution(std::vector<std::uint64_t>(begin, begin + static_cast<std::ptrdiff_t>(n_ + 1)));
}

SyndromeTable build_syndrome_table(const AdditiveCode& code) {
  const std::size_t n = code.length();
  if (2 * n > kMaxAmbientBits) throw BudgetExceeded("ambient space too large to sweep");
  auto check_rows = trace_dual(code).canonical_basis();

  // Packed ambient bit k is the symbol 1 (k < n) or w (k >= n) at position k mod n.
  std::vector<std::uint64_t> units(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    Gf4Vec e(n);
    e.set(k % n, k < n ? Gf4::one() : Gf4::w());
    units[k] = star_product(check_rows, e).bits();
  }
  const auto bits = static_cast<unsigned>(check_rows.size());
  auto sweep = kernels::parallel::syndrome_sweep(units, bits, kernels::quaternary_fold(n), n);

  std::vector<Gf4Vec> leaders;
  leaders.reserve(sweep.leader.size());
  for (auto v : sweep.leader) leaders.push_back(Gf4Vec::from_packed(n, v));
  return SyndromeTable(n, std::move(check_rows), std::move(sweep.leader_weight), std::move(leaders),
                       std::move(sweep.histogram));
}

std::vector<CosetProfile> coset_profiles(const AdditiveCode& code, const SyndromeTable& table) {
  if (code.rank() > kMaxEnumerationRank) throw BudgetExceeded("code too large to enumerate");
  if (table.length() != code.length()) throw LengthMismatch("syndrome table built for a different length");
  std::vector<std::uint64_t> offsets;
  offsets.reserve(table.coset_count());
  for (std::uint32_t s = 0; s < table.coset_count(); ++s) offsets.push_back(table.leader(s).packed());
  auto censuses = kernels::parallel::coset_weight_censuses(code.packed_basis().rows(), offsets,
                                                           kernels::quaternary_fold(code.length()), code.length());
  std::vector<CosetProfile> out;
  out.reserve(censuses.size());
  for (std::uint32_t s = 0; s < censuses.size(); ++s) {
    out.push_back({BitVec(table.syndrome_bits(), s), table.leader_weight(s), WeightDistribution(std::move(censuses[s]))});
  }
  return out;
}

bool is_completely_regular(std::span<const CosetProfile> profiles) {
  std::map<std::size_t, const CosetProfile*> first;
  for (const auto& p : profiles) {
    auto [it, inserted] = first.emplace(p.coset_weight, &p);
    if (!inserted && !(it->second->distribution == p.distribution)) return false;
  }
  return true;
}

PackingConstants uniformly_packed_check(std::size_t minimum_distance, std::span<const CosetProfile> profiles) {
  if (minimum_distance == 0) throw InvalidArgument("packing radius of a code without nonzero words");
  const std::size_t e = (minimum_distance - 1) / 2;
  const CosetProfile* lambda_at = nullptr;
  const CosetProfile* mu_at = nullptr;
  PackingConstants out;
  for (const auto& p : profiles) {
    if (p.coset_weight < e) continue;
    const std::uint64_t count = p.distribution[e + 1];
    const CosetProfile*& seen = p.coset_weight == e ? lambda_at : mu_at;
    std::uint64_t& value = p.coset_weight == e ? out.lambda : out.mu;
    if (seen == nullptr) {
      seen = &p;
      value = count;
    } else if (value != count) {
      throw NotUniformlyPacked("codewords at distance " + std::to_string(e + 1) + ": " + describe(*seen) + " sees " +
                               std::to_string(value) + ", " + describe(p) + " sees " + std::to_string(count));
    }
  }
  // mu stays 0 when no coset is deeper than e (perfect codes).
  return out;
}

PackingConstants uniformly_packed_check(const AdditiveCode& code, std::span<const CosetProfile> profiles) {
  return uniformly_packed_check(minimum_distance(code), profiles);
}

PackingConstants lemma_lambda_mu(std::uint64_t n, std::uint64_t q, std::uint64_t e, std::uint64_t a_odd,
                                 std::uint64_t a_even) {
  if (q < 2) throw InvalidArgument("alphabet size below 2");
  // lambda (q-1)^e C(n,e) = A_{2e+1} C(2e+1,e)
  const Wide x = static_cast<Wide>(a_odd) * binomial(2 * e + 1, e);
  const Wide lambda_den = checked_power(q - 1, e) * binomial(n, e);
  if (lambda_den == 0 || x % lambda_den != 0) throw NonIntegralSolution("lambda is not an integer");
  const Wide lambda = x / lambda_den;

  // x(e+1)(q-2) + A_{2e+2} C(2e+2,e+1) = (lambda - mu) x + (mu - 1) y
  const Wide y = checked_power(q - 1, e + 1) * binomial(n, e + 1);
  const Wide lhs = x * (e + 1) * (q - 2) + static_cast<Wide>(a_even) * binomial(2 * e + 2, e + 1);
  const Wide mu_num = lhs - lambda * x + y;
  const Wide mu_den = y - x;
  if (mu_den == 0 || mu_num % mu_den != 0) throw NonIntegralSolution("mu is not an integer");
  const Wide mu = mu_num / mu_den;
  if (mu < 0) throw NonIntegralSolution("mu is negative");
  return {static_cast<std::uint64_t>(lambda), static_cast<std::uint64_t>(mu)};
}

BzzParameters bzz_parameters(std::uint64_t m) {
  if (m < 2) throw InvalidArgument("family parameter m must be at least 2");
  if (m > 30) throw InvalidArgument("family parameter m too large");
  const std::uint64_t mu = ((std::uint64_t{1} << (2 * m)) - 1) / 3;
  return {((std::uint64_t{1} << (2 * m + 1)) + 1) / 3, 2 * m + 1, 2, mu - 1, mu};
}

}  // namespace cosetforge
