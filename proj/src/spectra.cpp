#include "cosetforge/spectra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cosetforge/error.hpp"
#include "cosetforge/gf2.hpp"
#include "cosetforge/kernels.hpp"

namespace cosetforge {

namespace {

void check_connecting_set(unsigned m, std::span<const std::uint32_t> set) {
  if (m > 24) throw BudgetExceeded("character table above Z_2^24");
  if (set.empty()) throw InvalidArgument("empty connecting set");
  std::set<std::uint32_t> seen;
  for (auto s : set) {
    if (s == 0) throw InvalidArgument("connecting set contains 0");
    if (s >> m) throw InvalidArgument("connecting set element outside Z_2^m");
    if (!seen.insert(s).second) throw InvalidArgument("duplicate connecting set element");
  }
}

std::vector<std::int64_t> indicator_transform(unsigned m, std::span<const std::uint32_t> set) {
  std::vector<std::int64_t> data(std::size_t{1} << m, 0);
  for (auto s : set) data[s] += 1;
  kernels::parallel::fwht(data);
  return data;
}

// Groups characters by their tuple of relation eigenvalues. Rows come out
// sorted by column 1 descending, then by the remaining columns descending.
void fill_eigenmatrix(AssociationSchemeData& scheme) {
  const unsigned m = scheme.group_rank;
  const std::size_t classes = scheme.relation_sets.size();
  std::vector<std::vector<std::int64_t>> transforms;
  for (const auto& set : scheme.relation_sets) {
    std::vector<std::int64_t> data(std::size_t{1} << m, 0);
    for (auto s : set) data[s] += 1;
    kernels::parallel::fwht(data);
    transforms.push_back(std::move(data));
  }
  std::map<std::vector<std::int64_t>, std::uint64_t, std::greater<>> rows;
  for (std::size_t x = 0; x < (std::size_t{1} << m); ++x) {
    std::vector<std::int64_t> row(classes);
    for (std::size_t j = 0; j < classes; ++j) row[j] = transforms[j][x];
    ++rows[row];
  }
  if (rows.size() != classes) {
    throw NotAScheme(std::to_string(rows.size()) + " distinct character rows for " + std::to_string(classes) +
                     " relations");
  }
  // std::greater on the whole row puts column 0 (always 1) first, so the
  // ordering is effectively by column 1 descending.
  scheme.p.clear();
  scheme.multiplicities.clear();
  for (auto& [row, count] : rows) {
    scheme.p.push_back(row);
    scheme.multiplicities.push_back(count);
  }
}

AssociationSchemeData scheme_on_packed(std::span<const std::uint64_t> words, kernels::WeightFold fold) {
  if (words.empty()) throw InvalidArgument("empty codeword list");
  Gf2Basis basis(words);
  if (basis.rank() > 20) throw BudgetExceeded("distance scheme above 2^20 points");
  if ((std::size_t{1} << basis.rank()) != words.size()) throw InvalidArgument("codewords do not form a group");
  std::set<std::uint64_t> distinct(words.begin(), words.end());
  if (distinct.size() != words.size()) throw InvalidArgument("repeated codeword");

  const std::size_t size = words.size();
  std::vector<unsigned> weight_of(size);  // indexed by coordinates
  std::set<unsigned> weights;
  for (auto x : words) {
    const auto c = *basis.coordinates(x);
    weight_of[c] = fold.weight(x);
    weights.insert(weight_of[c]);
  }
  if (*weights.begin() != 0) throw InvalidArgument("codewords do not contain 0");
  const std::vector<unsigned> ordered(weights.begin(), weights.end());
  std::vector<std::uint32_t> relation(size);
  for (std::size_t c = 0; c < size; ++c) {
    relation[c] = static_cast<std::uint32_t>(std::lower_bound(ordered.begin(), ordered.end(), weight_of[c]) - ordered.begin());
  }
  const std::size_t classes = ordered.size();

  // p^k_ij with x = 0 fixed: for each z count y with 0 R_i y and y R_j z,
  // which must depend only on the relation k of z.
  std::vector<std::vector<std::uint64_t>> reference(classes);
  std::vector<std::uint32_t> reference_point(classes);
  for (std::uint32_t z = 0; z < size; ++z) {
    std::vector<std::uint64_t> counts(classes * classes, 0);
    for (std::uint32_t y = 0; y < size; ++y) ++counts[relation[y] * classes + relation[y ^ z]];
    auto& ref = reference[relation[z]];
    if (ref.empty()) {
      ref = std::move(counts);
      reference_point[relation[z]] = z;
      continue;
    }
    if (ref != counts) {
      std::size_t at = 0;
      while (ref[at] == counts[at]) ++at;
      const std::size_t i = at / classes, j = at % classes;
      throw NotAScheme("p^" + std::to_string(relation[z]) + "_" + std::to_string(i) + std::to_string(j) + " differs: (0, " +
                       std::to_string(reference_point[relation[z]]) + ") gives " + std::to_string(ref[at]) + ", (0, " +
                       std::to_string(z) + ") gives " + std::to_string(counts[at]));
    }
  }

  AssociationSchemeData out;
  out.point_count = size;
  out.group_rank = static_cast<unsigned>(basis.rank());
  out.relation_sets.assign(classes, {});
  for (std::uint32_t c = 0; c < size; ++c) out.relation_sets[relation[c]].push_back(c);
  for (const auto& set : out.relation_sets) out.valencies.push_back(set.size());
  fill_eigenmatrix(out);
  return out;
}

}  // namespace

Spectrum::Spectrum(std::vector<std::pair<std::int64_t, std::uint64_t>> pairs) {
  std::map<std::int64_t, std::uint64_t, std::greater<>> merged;
  for (auto [value, mult] : pairs) {
    if (mult > 0) merged[value] += mult;
  }
  pairs_.assign(merged.begin(), merged.end());
}

Spectrum Spectrum::from_values(std::span<const std::int64_t> values) {
  std::vector<std::pair<std::int64_t, std::uint64_t>> pairs;
  pairs.reserve(values.size());
  for (auto v : values) pairs.emplace_back(v, 1);
  return Spectrum(std::move(pairs));
}

std::uint64_t Spectrum::multiplicity(std::int64_t eigenvalue) const {
  for (auto [value, mult] : pairs_) {
    if (value == eigenvalue) return mult;
  }
  return 0;
}

std::uint64_t Spectrum::total_multiplicity() const {
  std::uint64_t total = 0;
  for (auto [value, mult] : pairs_) total += mult;
  return total;
}

std::int64_t Spectrum::trace() const {
  std::int64_t t = 0;
  for (auto [value, mult] : pairs_) t += value * static_cast<std::int64_t>(mult);
  return t;
}

std::int64_t Spectrum::trace_of_square() const {
  std::int64_t t = 0;
  for (auto [value, mult] : pairs_) t += value * value * static_cast<std::int64_t>(mult);
  return t;
}

bool Spectrum::satisfies_trace_identities(std::size_t vertex_count, std::size_t edge_count) const {
  return total_multiplicity() == vertex_count && trace() == 0 &&
         trace_of_square() == 2 * static_cast<std::int64_t>(edge_count);
}

std::string Spectrum::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pairs_[i].first) + "^" + std::to_string(pairs_[i].second);
  }
  return s + "}";
}

std::vector<std::int64_t> character_sums(unsigned m, std::span<const std::uint32_t> connecting_set) {
  check_connecting_set(m, connecting_set);
  return indicator_transform(m, connecting_set);
}

Spectrum wht_spectrum(unsigned m, std::span<const std::uint32_t> connecting_set) {
  const auto sums = character_sums(m, connecting_set);
  return Spectrum::from_values(sums);
}

Spectrum spectrum_from_dual_weights(std::size_t n, const WeightDistribution& dual) {
  std::vector<std::pair<std::int64_t, std::uint64_t>> pairs;
  for (auto [i, count] : dual.entries()) {
    pairs.emplace_back(3 * static_cast<std::int64_t>(n) - 4 * static_cast<std::int64_t>(i), count);
  }
  return Spectrum(std::move(pairs));
}

SrgParams srg_params_from_spectrum(const Spectrum& spectrum) {
  const auto& p = spectrum.pairs();
  if (p.size() != 3) {
    throw NotStronglyRegular("spectrum has " + std::to_string(p.size()) + " distinct eigenvalues, not 3");
  }
  const std::int64_t k = p[0].first, r = p[1].first, s = p[2].first;
  if (p[0].second != 1 || k <= 0) throw NotStronglyRegular("largest eigenvalue is not simple");
  const std::int64_t mu = k + r * s;
  const std::int64_t lambda = mu + r + s;
  if (mu < 0 || lambda < 0) throw NotStronglyRegular("negative parameter from spectrum");
  return {spectrum.total_multiplicity(), static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(lambda),
          static_cast<std::uint64_t>(mu)};
}

AssociationSchemeData scheme_from_cayley_drg(unsigned m, std::span<const std::uint32_t> connecting_set) {
  const Graph g = cayley_graph_z2(m, connecting_set);
  drg_check(g);
  AssociationSchemeData out;
  out.point_count = g.vertex_count();
  out.group_rank = m;
  out.relation_sets = distance_partition(g, 0);
  for (const auto& set : out.relation_sets) out.valencies.push_back(set.size());
  fill_eigenmatrix(out);
  return out;
}

AssociationSchemeData distance_scheme_on_code(std::span<const Gf4Vec> codewords) {
  if (codewords.empty()) throw InvalidArgument("empty codeword list");
  const std::size_t n = codewords.front().size();
  std::vector<std::uint64_t> words;
  words.reserve(codewords.size());
  for (const auto& c : codewords) {
    if (c.size() != n) throw LengthMismatch("codewords of different lengths");
    words.push_back(c.packed());
  }
  return scheme_on_packed(words, kernels::quaternary_fold(n));
}

AssociationSchemeData distance_scheme_on_code(std::span<const BitVec> codewords) {
  if (codewords.empty()) throw InvalidArgument("empty codeword list");
  const std::size_t n = codewords.front().size();
  std::vector<std::uint64_t> words;
  words.reserve(codewords.size());
  for (const auto& c : codewords) {
    if (c.size() != n) throw LengthMismatch("codewords of different lengths");
    words.push_back(c.bits());
  }
  return scheme_on_packed(words, kernels::binary_fold(n));
}

Graph relation_graph(const AssociationSchemeData& scheme, std::size_t j) {
  if (j == 0 || j >= scheme.relation_sets.size()) throw IndexOutOfRange("relation index");
  return cayley_graph_z2(scheme.group_rank, scheme.relation_sets[j]);
}

DualityCheck verify_duality(const AssociationSchemeData& first, const AssociationSchemeData& second) {
  if (first.point_count != second.point_count) return {false, "point counts differ"};
  const std::size_t d = first.p.size();
  if (second.p.size() != d) return {false, "class counts differ"};
  const auto x = static_cast<std::int64_t>(first.point_count);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < d; ++k) sum += first.p[i][k] * second.p[k][j];
      const std::int64_t want = i == j ? x : 0;
      if (sum != want) {
        return {false, "product entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " + std::to_string(sum) +
                           ", expected " + std::to_string(want)};
      }
    }
  }
  if (first.multiplicities != second.valencies) return {false, "multiplicities of the first are not valencies of the second"};
  if (second.multiplicities != first.valencies) return {false, "multiplicities of the second are not valencies of the first"};
  return {true, "P1 P2 = " + std::to_string(x) + " I"};
}

}  // namespace cosetforge
