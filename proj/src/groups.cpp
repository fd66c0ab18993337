#include "cosetforge/groups.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "cosetforge/error.hpp"
#include "cosetforge/isomorphism.hpp"
#include "cosetforge/kernels.hpp"

namespace cosetforge {

namespace {

constexpr std::size_t kMaxPoints = std::size_t{1} << 16;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::vector<std::vector<std::uint32_t>> classes_of(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> by_root(n);
  for (std::uint32_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

// One level of a stabiliser chain: strong generators fixing the earlier base
// points, and a transversal u_b (base -> b) for the orbit of the base point.
struct Level {
  std::uint32_t base = 0;
  std::vector<Permutation> generators;
  std::unordered_map<std::uint32_t, Permutation> transversal;

  void rebuild_orbit(std::size_t degree) {
    transversal.clear();
    transversal.emplace(base, Permutation::identity(degree));
    std::vector<std::uint32_t> queue{base};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto b = queue[head];
      for (const auto& s : generators) {
        const auto c = static_cast<std::uint32_t>(s(b));
        if (transversal.contains(c)) continue;
        transversal.emplace(c, transversal.at(b) * s);
        queue.push_back(c);
      }
    }
  }
};

// Sifts g through levels [from, end); returns the residue and the level at
// which it stopped (levels.size() if it passed every level).
std::pair<Permutation, std::size_t> sift(const std::vector<Level>& levels, Permutation g, std::size_t from) {
  for (std::size_t i = from; i < levels.size(); ++i) {
    const auto b = static_cast<std::uint32_t>(g(levels[i].base));
    const auto it = levels[i].transversal.find(b);
    if (it == levels[i].transversal.end()) return {std::move(g), i};
    g = g * it->second.inverse();
  }
  return {std::move(g), levels.size()};
}

std::uint32_t moved_point(const Permutation& p) {
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (p(i) != i) return i;
  }
  return 0;
}

bool commute(const Permutation& x, const Permutation& y) { return x * y == y * x; }

bool is_complete_graph(const Graph& g) { return g.edge_count() * 2 == g.vertex_count() * (g.vertex_count() - 1); }

// Disjoint union of `count` copies of K_size.
bool is_union_of_cliques(const Graph& g, std::size_t count, std::size_t size) {
  if (g.vertex_count() != count * size) return false;
  if (g.regular_degree() != size - 1) return false;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.adjacent(nb[i], nb[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  if (images_.size() > kMaxPoints) throw InvalidArgument("permutation on more than 65536 points");
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw InvalidArgument("images do not form a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n > kMaxPoints) throw InvalidArgument("permutation on more than 65536 points");
  std::vector<std::uint16_t> images(n);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, std::string_view text) {
  std::vector<std::uint16_t> images(n);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t value = 0;
      const std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') value = value * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (i == start) throw ParseError(std::string("unexpected character '") + text[i] + "' in cycle");
      if (value == 0 || value > n) throw ParseError("cycle point " + std::to_string(value) + " outside 1.." + std::to_string(n));
      if (used[value - 1]) throw ParseError("point " + std::to_string(value) + " appears twice");
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const { return kernels::scan_permutation(*this).order; }

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::string Permutation::to_cycles() const {
  std::string s;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += "(";
    std::size_t j = i;
    do {
      if (j != i) s += " ";
      s += std::to_string(j + 1);
      seen[j] = true;
      j = images_[j];
    } while (j != i);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& first, const Permutation& then) {
  if (first.size() != then.size()) throw LengthMismatch("composing permutations of different degrees");
  Permutation p;
  p.images_.resize(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) p.images_[i] = then.images_[first.images_[i]];
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t group_order(const PermGroup& group) {
  std::vector<Level> levels;
  for (const auto& g : group.generators) {
    if (g.size() != group.degree) throw LengthMismatch("generator of wrong degree");
    if (g.is_identity()) continue;
    if (levels.empty()) levels.push_back({moved_point(g), {}, {}});
    levels[0].generators.push_back(g);
  }
  if (levels.empty()) return 1;
  levels[0].rebuild_orbit(group.degree);

  // Holt's iterative Schreier-Sims: level i is complete once every Schreier
  // generator of its orbit sifts to the identity through the levels below.
  std::ptrdiff_t i = 0;
  while (i >= 0) {
    auto& level = levels[static_cast<std::size_t>(i)];
    bool extended = false;
    for (const auto& [b, u] : std::vector(level.transversal.begin(), level.transversal.end())) {
      for (const auto& s : std::vector(level.generators)) {
        const auto c = static_cast<std::uint32_t>(s(b));
        Permutation h = u * s * levels[static_cast<std::size_t>(i)].transversal.at(c).inverse();
        if (h.is_identity()) continue;
        auto [residue, stop] = sift(levels, std::move(h), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (stop == levels.size()) levels.push_back({moved_point(residue), {}, {}});
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels[l].generators.push_back(residue);
          levels[l].rebuild_orbit(group.degree);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }
  std::uint64_t order = 1;
  for (const auto& level : levels) order *= level.transversal.size();
  return order;
}

Permutation monomial_to_weight1_perm(const MonomialMap& m) {
  const std::size_t n = m.size();
  const Gf4 symbols[3] = {Gf4::one(), Gf4::w(), Gf4::w2()};
  auto symbol_index = [&](Gf4 s) {
    for (std::size_t t = 0; t < 3; ++t) {
      if (symbols[t] == s) return t;
    }
    throw InvalidArgument("zero scalar in monomial map");
  };
  std::vector<std::uint16_t> images(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = m.source(i);
    for (std::size_t t = 0; t < 3; ++t) {
      images[3 * j + t] = static_cast<std::uint16_t>(3 * i + symbol_index(m.scale(i) * symbols[t]));
    }
  }
  return Permutation(std::move(images));
}

Permutation monomial_to_vertex_perm(const MonomialMap& m, const AdditiveCode& code, const SyndromeTable& table) {
  if (m.size() != code.length() || table.length() != code.length()) throw LengthMismatch("monomial map of wrong length");
  if (!stabilizes(code, m)) throw NotAStabilizer("monomial map does not stabilise the code");
  std::vector<std::uint16_t> images(table.coset_count());
  for (std::uint32_t s = 0; s < table.coset_count(); ++s) {
    images[s] = static_cast<std::uint16_t>(table.syndrome(m.apply(table.leader(s))));
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> translation_generators(unsigned m) {
  if (m > 16) throw InvalidArgument("translations above Z_2^16");
  const std::size_t n = std::size_t{1} << m;
  std::vector<Permutation> out;
  for (unsigned i = 0; i < m; ++i) {
    std::vector<std::uint16_t> images(n);
    for (std::size_t v = 0; v < n; ++v) images[v] = static_cast<std::uint16_t>(v ^ (std::size_t{1} << i));
    out.emplace_back(std::move(images));
  }
  return out;
}

std::vector<Permutation> graph_group_closure(std::span<const Permutation> generators, std::size_t limit) {
  if (generators.empty()) return {};
  const std::size_t degree = generators.front().size();
  std::vector<Permutation> elements{Permutation::identity(degree)};

  // The set stores indices into `elements`, hashed and compared by value.
  struct ByIndexHash {
    const std::vector<Permutation>* all;
    std::size_t operator()(std::uint32_t i) const { return PermutationHash{}((*all)[i]); }
  };
  struct ByIndexEqual {
    const std::vector<Permutation>* all;
    bool operator()(std::uint32_t x, std::uint32_t y) const { return (*all)[x] == (*all)[y]; }
  };
  std::unordered_set<std::uint32_t, ByIndexHash, ByIndexEqual> seen(1024, ByIndexHash{&elements}, ByIndexEqual{&elements});
  seen.insert(0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      if (g.size() != degree) throw LengthMismatch("generator of wrong degree");
      elements.push_back(elements[head] * g);
      if (!seen.insert(static_cast<std::uint32_t>(elements.size() - 1)).second) {
        elements.pop_back();
      } else if (elements.size() > limit) {
        throw LimitExceeded("group closure exceeds " + std::to_string(limit) + " elements");
      }
    }
  }
  return elements;
}

std::vector<std::vector<std::uint32_t>> point_orbits(std::span<const Permutation> generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().size();
  UnionFind uf(n);
  for (const auto& g : generators) {
    for (std::uint32_t i = 0; i < n; ++i) uf.unite(i, static_cast<std::uint32_t>(g(i)));
  }
  return classes_of(uf, n);
}

std::vector<std::vector<Edge>> edge_orbits(std::span<const Permutation> generators, const Graph& g) {
  const auto edges = g.edges();
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  auto key = [&](std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
  };
  for (std::uint32_t e = 0; e < edges.size(); ++e) index.emplace(key(edges[e].first, edges[e].second), e);
  UnionFind uf(edges.size());
  for (const auto& p : generators) {
    if (p.size() != g.vertex_count()) throw LengthMismatch("permutation degree differs from vertex count");
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      const auto it = index.find(key(static_cast<std::uint32_t>(p(edges[e].first)), static_cast<std::uint32_t>(p(edges[e].second))));
      if (it == index.end()) throw InvalidArgument("permutation is not a graph automorphism");
      uf.unite(e, it->second);
    }
  }
  std::vector<std::vector<Edge>> out;
  for (const auto& cls : classes_of(uf, edges.size())) {
    std::vector<Edge> orbit;
    for (auto e : cls) orbit.push_back(edges[e]);
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_automorphism(const Permutation& p, const Graph& g) {
  if (p.size() != g.vertex_count()) return false;
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (auto v : g.neighbors(u)) {
      if (!g.adjacent(static_cast<std::uint32_t>(p(u)), static_cast<std::uint32_t>(p(v)))) return false;
    }
  }
  return true;
}

std::size_t vertex_stabilizer_order(std::span<const Permutation> elements, std::uint32_t v) {
  return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [&](const Permutation& p) { return p(v) == v; }));
}

GroupCensus group_census(std::span<const Permutation> elements) {
  GroupCensus c;
  c.order = elements.size();
  std::vector<Permutation> sylow;
  for (const auto& p : elements) {
    const auto o = p.order();
    ++c.order_census[o];
    std::uint64_t r = o;
    while (r % 3 == 0) r /= 3;
    if (r == 1) {
      sylow.push_back(p);
      c.sylow3_exponent = std::max(c.sylow3_exponent, o);
    }
  }
  auto all_commute = [](std::span<const Permutation> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (!commute(xs[i], xs[j])) return false;
      }
    }
    return true;
  };
  c.abelian = all_commute(elements);
  c.sylow3_order = sylow.size();
  std::unordered_set<Permutation, PermutationHash> members(sylow.begin(), sylow.end());
  c.sylow3_is_subgroup = true;
  for (const auto& x : sylow) {
    for (const auto& y : sylow) {
      if (!members.contains(x * y)) {
        c.sylow3_is_subgroup = false;
        break;
      }
    }
    if (!c.sylow3_is_subgroup) break;
  }
  c.sylow3_abelian = all_commute(sylow);
  return c;
}

bool matches_c9_c3_c2(const GroupCensus& c) {
  for (const auto& [order, count] : c.order_census) {
    if (order != 1 && order != 2 && order != 3 && order != 6 && order != 9) return false;
  }
  return c.order == 54 && !c.abelian && c.order_census.contains(9) && c.sylow3_order == 27 && c.sylow3_is_subgroup &&
         !c.sylow3_abelian && c.sylow3_exponent == 9;
}

std::string to_string(FixedSubgraphClass c) {
  switch (c) {
    case FixedSubgraphClass::whole_graph: return "whole graph";
    case FixedSubgraphClass::null_graph: return "null graph";
    case FixedSubgraphClass::eight_k4: return "8 K4";
    case FixedSubgraphClass::edge_free_4: return "edge-free on 4 vertices";
    case FixedSubgraphClass::hamming_2_4: return "H(2,4)";
    case FixedSubgraphClass::edge_free_2: return "edge-free on 2 vertices";
    case FixedSubgraphClass::single_vertex: return "one vertex";
    case FixedSubgraphClass::k4: return "K4";
  }
  return "unknown";
}

FixedSubgraphClass classify_fixed_subgraph(const Graph& fixed, std::size_t whole_vertex_count,
                                           std::chrono::milliseconds budget) {
  const std::size_t k = fixed.vertex_count();
  const std::size_t e = fixed.edge_count();
  if (k == 0) return FixedSubgraphClass::null_graph;
  if (k == whole_vertex_count) return FixedSubgraphClass::whole_graph;
  if (k == 1) return FixedSubgraphClass::single_vertex;
  if (k == 2 && e == 0) return FixedSubgraphClass::edge_free_2;
  if (k == 4 && e == 0) return FixedSubgraphClass::edge_free_4;
  if (k == 4 && is_complete_graph(fixed)) return FixedSubgraphClass::k4;
  if (k == 32 && is_union_of_cliques(fixed, 8, 4)) return FixedSubgraphClass::eight_k4;
  if (k == 16) {
    const auto r = isomorphic(fixed, hamming_graph(2, 4), budget);
    if (r.verdict == IsoVerdict::yes) return FixedSubgraphClass::hamming_2_4;
    if (r.verdict == IsoVerdict::unknown) throw UnclassifiedSubgraph("isomorphism test with H(2,4) ran out of budget");
  }
  throw UnclassifiedSubgraph("fixed subgraph on " + std::to_string(k) + " vertices with " + std::to_string(e) +
                             " edges matches no known case");
}

std::map<FixedSubgraphCase, std::uint64_t> fixed_subgraph_classification(std::span<const Permutation> elements,
                                                                         const Graph& g) {
  const auto scans = kernels::parallel::scan_permutations(elements);
  std::map<std::vector<std::uint32_t>, FixedSubgraphClass> cache;
  std::map<FixedSubgraphCase, std::uint64_t> out;
  for (std::size_t i = 0; i < scans.size(); ++i) {
    if (elements[i].size() != g.vertex_count()) throw LengthMismatch("permutation degree differs from vertex count");
    auto it = cache.find(scans[i].fixed);
    if (it == cache.end()) {
      it = cache.emplace(scans[i].fixed, classify_fixed_subgraph(g.induced(scans[i].fixed), g.vertex_count())).first;
    }
    ++out[{scans[i].order, it->second}];
  }
  return out;
}

}  // namespace cosetforge
