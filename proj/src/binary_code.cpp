#include "cosetforge/binary_code.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "cosetforge/error.hpp"
#include "cosetforge/gf2.hpp"
#include "cosetforge/kernels.hpp"

namespace cosetforge {

namespace {

using Wide = __int128;

std::vector<BitVec> as_bitvecs(std::size_t n, std::span<const std::uint64_t> rows) {
  std::vector<BitVec> out;
  out.reserve(rows.size());
  for (auto r : rows) out.emplace_back(n, r);
  return out;
}

std::vector<std::uint64_t> raw_bits(std::span<const BitVec> rows, std::size_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != n) throw LengthMismatch("row length differs from code length");
    out.push_back(r.bits());
  }
  return out;
}

// The antipodal pair psi(symbol), as 3-bit words with bit k at position 3j + k.
constexpr std::array<std::array<std::uint64_t, 2>, 4> kPsiPairs = {{
    {0b000, 0b111},  // 0 -> 000, 111
    {0b001, 0b110},  // 1 -> 100, 011
    {0b100, 0b011},  // w -> 001, 110
    {0b010, 0b101},  // w^2 -> 010, 101
}};

}  // namespace

BinaryLinearCode BinaryLinearCode::from_generators(std::size_t n, std::span<const BitVec> rows) {
  if (n > kMaxBinaryLength) throw InvalidArgument("binary code longer than 64");
  const auto bits = raw_bits(rows, n);
  const Gf2Basis basis(bits);
  BinaryLinearCode c;
  c.n_ = n;
  c.generators_ = as_bitvecs(n, basis.rows());
  c.check_rows_ = as_bitvecs(n, Gf2Basis(gf2_nullspace(basis.rows(), n)).rows());
  return c;
}

BinaryLinearCode BinaryLinearCode::from_check_rows(std::size_t n, std::span<const BitVec> rows) {
  if (n > kMaxBinaryLength) throw InvalidArgument("binary code longer than 64");
  const auto bits = raw_bits(rows, n);
  if (Gf2Basis(bits).rank() != bits.size()) throw InvalidArgument("check rows are dependent");
  BinaryLinearCode c;
  c.n_ = n;
  c.check_rows_.assign(rows.begin(), rows.end());
  c.generators_ = as_bitvecs(n, Gf2Basis(gf2_nullspace(bits, n)).rows());
  return c;
}

bool BinaryLinearCode::contains(const BitVec& x) const { return syndrome(x) == 0; }

std::uint32_t BinaryLinearCode::syndrome(const BitVec& x) const {
  if (x.size() != n_) throw LengthMismatch("vector length differs from code length");
  if (check_rows_.size() > 32) throw BudgetExceeded("syndrome wider than 32 bits");
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < check_rows_.size(); ++i) s |= static_cast<std::uint32_t>(dot(check_rows_[i], x)) << i;
  return s;
}

std::vector<BitVec> BinaryLinearCode::codewords() const {
  if (dimension() > kMaxEnumerationRank) throw BudgetExceeded("code too large to enumerate");
  std::vector<BitVec> out;
  out.reserve(size());
  std::uint64_t word = 0;
  out.emplace_back(n_, word);
  for (std::uint64_t i = 1; i < size(); ++i) {
    word ^= generators_[std::countr_zero(i)].bits();
    out.emplace_back(n_, word);
  }
  return out;
}

BinaryLinearCode BinaryLinearCode::dual() const {
  BinaryLinearCode d;
  d.n_ = n_;
  const auto bits = raw_bits(check_rows_, n_);
  d.generators_ = as_bitvecs(n_, Gf2Basis(bits).rows());
  d.check_rows_ = generators_;
  return d;
}

BitVec phi_map(const Gf4Vec& x) {
  if (3 * x.size() > kMaxBinaryLength) throw InvalidArgument("phi image longer than 64");
  BitVec out(3 * x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Gf4 s = x[j];
    out.set(3 * j, s.b());
    out.set(3 * j + 1, s.a() != s.b());
    out.set(3 * j + 2, s.a());
  }
  return out;
}

BinaryLinearCode phi_dual_construction(const AdditiveCode& q) {
  std::vector<BitVec> rows;
  for (const auto& h : trace_dual(q).canonical_basis()) rows.push_back(phi_map(h));
  if (rows.empty()) {
    // Q is the full space: no checks, B is the full binary space.
    std::vector<BitVec> units;
    for (std::size_t i = 0; i < 3 * q.length(); ++i) units.emplace_back(3 * q.length(), std::uint64_t{1} << i);
    return BinaryLinearCode::from_generators(3 * q.length(), units);
  }
  return BinaryLinearCode::from_check_rows(3 * q.length(), rows);
}

BitVec lift_leader(const Gf4Vec& x) {
  if (3 * x.size() > kMaxBinaryLength) throw InvalidArgument("lift longer than 64");
  BitVec out(3 * x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Gf4 s = x[j];
    if (s == Gf4::one()) out.set(3 * j, true);
    if (s == Gf4::w2()) out.set(3 * j + 1, true);
    if (s == Gf4::w()) out.set(3 * j + 2, true);
  }
  return out;
}

WeightDistribution binary_weight_distribution(const BinaryLinearCode& code) {
  if (code.dimension() > kMaxEnumerationRank) throw BudgetExceeded("code too large to enumerate");
  const auto rows = raw_bits(code.generators(), code.length());
  return WeightDistribution(
      kernels::parallel::span_weight_census(rows, kernels::binary_fold(code.length()), code.length()));
}

std::size_t minimum_distance(const BinaryLinearCode& code) {
  return binary_weight_distribution(code).min_nonzero_weight().value_or(0);
}

std::size_t external_distance(const BinaryLinearCode& code) {
  return binary_weight_distribution(code.dual()).nonzero_weights().size();
}

std::int64_t krawtchouk(std::size_t n, std::size_t j, std::size_t i) {
  if (i > n || j > n) throw InvalidArgument("Krawtchouk index above length");
  std::int64_t sum = 0;
  for (std::size_t t = 0; t <= std::min(i, j); ++t) {
    const auto term = static_cast<std::int64_t>(binomial(i, t) * binomial(n - i, j - t));
    sum += t % 2 ? -term : term;
  }
  return sum;
}

WeightDistribution macwilliams_binary(const WeightDistribution& wd, std::size_t n, std::uint64_t code_size) {
  if (code_size == 0) throw InvalidArgument("empty code");
  if (wd.total() != code_size) throw InvalidArgument("distribution does not sum to the code size");
  if (wd.max_weight() > n) {
    for (std::size_t i = n + 1; i <= wd.max_weight(); ++i) {
      if (wd[i] != 0) throw InvalidArgument("weight above the length");
    }
  }
  std::vector<std::uint64_t> out(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    Wide sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (wd[i] != 0) sum += static_cast<Wide>(wd[i]) * krawtchouk(n, j, i);
    }
    if (sum % code_size != 0 || sum < 0) {
      throw NonIntegralSolution("coefficient " + std::to_string(j) + " is not a nonnegative integer");
    }
    out[j] = static_cast<std::uint64_t>(sum / code_size);
  }
  return WeightDistribution(std::move(out));
}

Graph binary_coset_graph(const BinaryLinearCode& code) {
  const auto m = static_cast<unsigned>(code.check_rows().size());
  if (m > 20) throw BudgetExceeded("coset graph above 2^20 vertices");
  std::vector<std::uint32_t> columns;
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < code.length(); ++i) {
    const auto s = code.syndrome(BitVec(code.length(), std::uint64_t{1} << i));
    if (s == 0) throw MinDistanceTooSmall("check matrix has a zero column");
    if (!seen.insert(s).second) throw MinDistanceTooSmall("check matrix has a repeated column");
    columns.push_back(s);
  }
  return cayley_graph_z2(m, columns);
}

DualCosetEnumerator::DualCosetEnumerator(const BinaryLinearCode& code) : n_(code.length()) {
  if (code.check_rows().size() > 20) throw BudgetExceeded("dual code above 2^20 words");
  for (const auto& u : code.dual().codewords()) dual_words_.push_back(u.bits());
  kernel_.assign(n_ + 1, std::vector<std::int64_t>(n_ + 1));
  for (std::size_t w = 0; w <= n_; ++w) {
    for (std::size_t j = 0; j <= n_; ++j) kernel_[w][j] = krawtchouk(n_, j, w);
  }
}

WeightDistribution DualCosetEnumerator::distribution(const BitVec& representative) const {
  return distributions(std::span<const BitVec>(&representative, 1)).front();
}

std::vector<WeightDistribution> DualCosetEnumerator::distributions(std::span<const BitVec> representatives) const {
  const auto offsets = raw_bits(representatives, n_);
  const auto sums = kernels::parallel::signed_weight_sums(dual_words_, kernels::binary_fold(n_), offsets, n_);
  const auto size = static_cast<Wide>(dual_words_.size());
  std::vector<WeightDistribution> out;
  out.reserve(sums.size());
  for (const auto& s : sums) {
    std::vector<std::uint64_t> counts(n_ + 1, 0);
    for (std::size_t j = 0; j <= n_; ++j) {
      Wide total = 0;
      for (std::size_t w = 0; w <= n_; ++w) total += static_cast<Wide>(s[w]) * kernel_[w][j];
      if (total % size != 0 || total < 0) {
        throw NonIntegralSolution("coset coefficient " + std::to_string(j) + " is not a nonnegative integer");
      }
      counts[j] = static_cast<std::uint64_t>(total / size);
    }
    out.emplace_back(std::move(counts));
  }
  return out;
}

WeightDistribution coset_enumerator_via_dual(const BinaryLinearCode& code, const BitVec& representative) {
  return DualCosetEnumerator(code).distribution(representative);
}

WeightDistribution brute_force_coset_distribution(const BinaryLinearCode& code, const BitVec& representative) {
  if (code.dimension() > kMaxEnumerationRank) throw BudgetExceeded("coset too large to enumerate");
  if (representative.size() != code.length()) throw LengthMismatch("representative length differs from code length");
  const auto rows = raw_bits(code.generators(), code.length());
  const std::uint64_t offset = representative.bits();
  auto census = kernels::parallel::coset_weight_censuses(rows, std::span<const std::uint64_t>(&offset, 1),
                                                         kernels::binary_fold(code.length()), code.length());
  return WeightDistribution(std::move(census.front()));
}

std::vector<CosetProfile> lifted_coset_profiles(const BinaryLinearCode& code, const SyndromeTable& table) {
  if (3 * table.length() != code.length() || table.syndrome_bits() != code.check_rows().size()) {
    throw LengthMismatch("syndrome table does not match the binary code");
  }
  std::vector<BitVec> reps;
  reps.reserve(table.coset_count());
  for (std::uint32_t s = 0; s < table.coset_count(); ++s) {
    reps.push_back(lift_leader(table.leader(s)));
    if (code.syndrome(reps.back()) != s) throw InvalidArgument("lifted leader lands in the wrong coset");
  }
  const auto dists = DualCosetEnumerator(code).distributions(reps);
  std::vector<CosetProfile> out;
  out.reserve(dists.size());
  for (std::uint32_t s = 0; s < dists.size(); ++s) {
    out.push_back({BitVec(table.syndrome_bits(), s), *dists[s].min_weight(), dists[s]});
  }
  return out;
}

bool verify_psi_diagram(const AdditiveCode& q) {
  const std::size_t n = q.length();
  if (n > 4) throw BudgetExceeded("psi check is exhaustive and limited to n <= 4");
  std::set<std::uint64_t> psi;
  for (const auto& c : q.codewords()) {
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
      std::uint64_t word = 0;
      for (std::size_t j = 0; j < n; ++j) word |= kPsiPairs[c[j].code()][(choice >> j) & 1] << (3 * j);
      psi.insert(word);
    }
  }
  std::set<std::uint64_t> psi_dual;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (3 * n)); ++v) {
    bool orthogonal = true;
    for (auto u : psi) {
      if (parity(u & v)) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) psi_dual.insert(v);
  }
  std::set<std::uint64_t> phi_image;
  for (const auto& c : trace_dual(q).codewords()) phi_image.insert(phi_map(c).bits());
  return psi_dual == phi_image;
}

}  // namespace cosetforge
