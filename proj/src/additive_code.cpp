#include "cosetforge/additive_code.hpp"

#include <algorithm>

#include "cosetforge/error.hpp"
#include "cosetforge/kernels.hpp"

namespace cosetforge {

namespace {

std::uint64_t swap_halves(std::uint64_t packed, std::size_t n) {
  const std::uint64_t mask = low_mask(n);
  return ((packed >> n) & mask) | ((packed & mask) << n);
}

std::uint64_t drop_bit(std::uint64_t x, std::size_t pos) {
  const std::uint64_t below = x & low_mask(pos);
  return below | ((x >> (pos + 1)) << pos);
}

}  // namespace

AdditiveCode AdditiveCode::from_generators(std::size_t n, std::span<const Gf4Vec> rows) {
  if (n > kMaxQuaternaryLength) throw InvalidArgument("code length above 32");
  AdditiveCode code;
  code.n_ = n;
  for (const auto& row : rows) {
    if (row.size() != n) throw LengthMismatch("generator row of wrong length");
    if (code.basis_.insert(row.packed())) code.generators_.push_back(row);
  }
  return code;
}

AdditiveCode AdditiveCode::from_generators(std::span<const Gf4Vec> rows) {
  if (rows.empty()) throw InvalidArgument("cannot infer code length from an empty generator list");
  return from_generators(rows.front().size(), rows);
}

AdditiveCode AdditiveCode::zero_code(std::size_t n) { return from_generators(n, {}); }

AdditiveCode AdditiveCode::full_space(std::size_t n) {
  std::vector<Gf4Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Gf4Vec one(n), w(n);
    one.set(i, Gf4::one());
    w.set(i, Gf4::w());
    rows.push_back(one);
    rows.push_back(w);
  }
  return from_generators(n, rows);
}

std::vector<Gf4Vec> AdditiveCode::canonical_basis() const {
  std::vector<Gf4Vec> out;
  out.reserve(rank());
  for (auto row : basis_.rows()) out.push_back(Gf4Vec::from_packed(n_, row));
  return out;
}

bool AdditiveCode::contains(const Gf4Vec& x) const {
  if (x.size() != n_) throw LengthMismatch("membership test with vector of wrong length");
  return basis_.contains(x.packed());
}

std::vector<Gf4Vec> AdditiveCode::codewords() const {
  if (rank() > kMaxEnumerationRank) throw BudgetExceeded("code too large to enumerate");
  std::vector<Gf4Vec> out;
  out.reserve(size());
  const auto& rows = basis_.rows();
  std::uint64_t v = 0;
  out.push_back(Gf4Vec::from_packed(n_, v));
  for (std::uint64_t i = 1; i < size(); ++i) {
    v ^= rows[std::countr_zero(i)];
    out.push_back(Gf4Vec::from_packed(n_, v));
  }
  return out;
}

AdditiveCode cyclic_additive_code(const Gf4Vec& word) {
  const std::size_t n = word.size();
  std::vector<Gf4Vec> shifts;
  shifts.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    Gf4Vec shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted.set((i + s) % n, word[i]);
    shifts.push_back(shifted);
  }
  return AdditiveCode::from_generators(n, shifts);
}

AdditiveCode puncture(const AdditiveCode& code, std::size_t position) {
  const std::size_t n = code.length();
  if (position >= n) throw IndexOutOfRange("puncture position out of range");
  std::vector<Gf4Vec> rows;
  rows.reserve(code.generators().size());
  for (const auto& g : code.generators()) {
    rows.emplace_back(n - 1, drop_bit(g.a_bits(), position), drop_bit(g.b_bits(), position));
  }
  return AdditiveCode::from_generators(n - 1, rows);
}

AdditiveCode trace_dual(const AdditiveCode& code) {
  const std::size_t n = code.length();
  std::vector<std::uint64_t> constraints;
  for (auto row : code.packed_basis().rows()) constraints.push_back(swap_halves(row, n));
  std::vector<Gf4Vec> rows;
  for (auto y : gf2_nullspace(constraints, 2 * n)) rows.push_back(Gf4Vec::from_packed(n, y));
  return AdditiveCode::from_generators(n, rows);
}

WeightDistribution weight_distribution(const AdditiveCode& code) {
  if (code.rank() > kMaxEnumerationRank) throw BudgetExceeded("code too large to enumerate");
  const auto fold = kernels::quaternary_fold(code.length());
  return WeightDistribution(kernels::parallel::span_weight_census(code.packed_basis().rows(), fold, code.length()));
}

std::size_t minimum_distance(const AdditiveCode& code) {
  return weight_distribution(code).min_nonzero_weight().value_or(0);
}

std::size_t external_distance(const AdditiveCode& code) {
  return weight_distribution(trace_dual(code)).nonzero_weights().size();
}

bool is_linear(const AdditiveCode& code) {
  for (const auto& g : code.canonical_basis()) {
    if (!code.contains(g.scaled(Gf4::w()))) return false;
  }
  return true;
}

MonomialMap::MonomialMap(std::vector<std::size_t> source, std::vector<Gf4> scale)
    : source_(std::move(source)), scale_(std::move(scale)) {
  if (source_.size() != scale_.size()) throw InvalidArgument("monomial map with mismatched sizes");
  std::vector<bool> hit(source_.size(), false);
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if (source_[i] >= source_.size() || hit[source_[i]]) throw InvalidArgument("monomial map is not a permutation");
    hit[source_[i]] = true;
    if (scale_[i].is_zero()) throw InvalidArgument("monomial map with a zero scalar");
  }
}

MonomialMap MonomialMap::identity(std::size_t n) {
  std::vector<std::size_t> source(n);
  for (std::size_t i = 0; i < n; ++i) source[i] = i;
  return MonomialMap(std::move(source), std::vector<Gf4>(n, Gf4::one()));
}

MonomialMap MonomialMap::from_matrix(const std::vector<std::vector<Gf4>>& rows) {
  std::vector<std::size_t> source;
  std::vector<Gf4> scale;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw InvalidArgument("monomial matrix is not square");
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) {
        ++nonzero;
        source.push_back(j);
        scale.push_back(row[j]);
      }
    }
    if (nonzero != 1) throw InvalidArgument("monomial matrix row without exactly one nonzero entry");
  }
  return MonomialMap(std::move(source), std::move(scale));
}

Gf4Vec MonomialMap::apply(const Gf4Vec& x) const {
  if (x.size() != size()) throw LengthMismatch("monomial map applied to vector of wrong length");
  Gf4Vec y(x.size());
  for (std::size_t i = 0; i < size(); ++i) y.set(i, scale_[i] * x[source_[i]]);
  return y;
}

MonomialMap MonomialMap::then(const MonomialMap& next) const {
  if (next.size() != size()) throw LengthMismatch("composing monomial maps of different sizes");
  std::vector<std::size_t> source(size());
  std::vector<Gf4> scale(size());
  for (std::size_t i = 0; i < size(); ++i) {
    source[i] = source_[next.source_[i]];
    scale[i] = next.scale_[i] * scale_[next.source_[i]];
  }
  return MonomialMap(std::move(source), std::move(scale));
}

AdditiveCode apply_monomial(const AdditiveCode& code, const MonomialMap& m) {
  if (m.size() != code.length()) throw LengthMismatch("monomial map and code differ in length");
  std::vector<Gf4Vec> rows;
  for (const auto& g : code.generators()) rows.push_back(m.apply(g));
  return AdditiveCode::from_generators(code.length(), rows);
}

bool stabilizes(const AdditiveCode& code, const MonomialMap& m) {
  if (m.size() != code.length()) throw LengthMismatch("monomial map and code differ in length");
  return std::all_of(code.generators().begin(), code.generators().end(),
                     [&](const Gf4Vec& g) { return code.contains(m.apply(g)); });
}

}  // namespace cosetforge
