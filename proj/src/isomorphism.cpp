#include "cosetforge/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "cosetforge/error.hpp"
#include "cosetforge/gf2.hpp"

namespace cosetforge {

namespace {

using Clock = std::chrono::steady_clock;
using Coloring = std::vector<std::uint32_t>;

struct Deadline {
  Clock::time_point at;
  bool expired() const { return Clock::now() >= at; }
};

class TimedOut {};

std::size_t color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Signature of v: its colour followed by run-length encoded neighbour colours.
std::vector<std::uint32_t> signature(const Graph& g, const Coloring& c, std::uint32_t v, std::vector<std::uint32_t>& buf) {
  buf.clear();
  for (auto x : g.neighbors(v)) buf.push_back(c[x]);
  std::sort(buf.begin(), buf.end());
  std::vector<std::uint32_t> sig{c[v]};
  for (std::size_t i = 0; i < buf.size();) {
    std::size_t j = i;
    while (j < buf.size() && buf[j] == buf[i]) ++j;
    sig.push_back(buf[i]);
    sig.push_back(static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return sig;
}

// Refines the colourings of all graphs jointly until stable. Colour ids are
// ranks of signatures, so the result is canonical. Returns false when the
// graphs disagree on the size of some colour class.
bool refine(std::span<const Graph* const> graphs, std::span<Coloring> colors, const Deadline* deadline) {
  std::vector<std::uint32_t> buf;
  std::size_t classes = 0;
  for (const auto& c : colors) classes = std::max(classes, color_count(c));
  // Normalise ids first so that the class count is meaningful.
  bool first_round = true;
  for (;;) {
    if (deadline && deadline->expired()) throw TimedOut{};
    std::vector<std::vector<std::vector<std::uint32_t>>> sigs(graphs.size());
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      sigs[gi].reserve(g.vertex_count());
      for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        sigs[gi].push_back(signature(g, colors[gi], v, buf));
        ids.emplace(sigs[gi].back(), 0);
      }
    }
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<std::vector<std::size_t>> sizes(graphs.size(), std::vector<std::size_t>(ids.size(), 0));
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      for (std::uint32_t v = 0; v < sigs[gi].size(); ++v) {
        colors[gi][v] = ids[sigs[gi][v]];
        ++sizes[gi][colors[gi][v]];
      }
    }
    for (std::size_t gi = 1; gi < graphs.size(); ++gi) {
      if (sizes[gi] != sizes[0]) return false;
    }
    if (!first_round && ids.size() == classes) return true;
    first_round = false;
    classes = ids.size();
  }
}

// Cell sizes followed by the quotient matrix of an equitable colouring.
std::vector<std::uint64_t> describe(const Graph& g, const Coloring& c) {
  const std::size_t k = color_count(c);
  std::vector<std::uint64_t> out(k + k * k, 0);
  std::vector<bool> done(k, false);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    ++out[c[v]];
    if (done[c[v]]) continue;
    done[c[v]] = true;
    for (auto x : g.neighbors(v)) ++out[k + c[v] * k + c[x]];
  }
  return out;
}

void collect_invariant(const Graph& g, const Coloring& c, unsigned depth, const Deadline* deadline,
                       std::vector<std::vector<std::uint64_t>>& out) {
  if (depth == 0) {
    out.push_back(describe(g, c));
    return;
  }
  const Graph* gs[] = {&g};
  const auto fresh = static_cast<std::uint32_t>(color_count(c));
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    Coloring next = c;
    next[v] = fresh;
    std::span<Coloring> cs(&next, 1);
    refine(gs, cs, deadline);
    collect_invariant(g, next, depth - 1, deadline, out);
  }
}

std::vector<std::vector<std::uint64_t>> invariant_with_deadline(const Graph& g, unsigned depth, const Deadline* deadline) {
  Coloring c(g.vertex_count(), 0);
  const Graph* gs[] = {&g};
  std::span<Coloring> cs(&c, 1);
  refine(gs, cs, deadline);
  std::vector<std::vector<std::uint64_t>> out;
  collect_invariant(g, c, depth, deadline, out);
  std::sort(out.begin(), out.end());
  return out;
}

struct Search {
  const Graph& g1;
  const Graph& g2;
  Deadline deadline;
  std::vector<std::uint32_t> mapping;

  bool run(const Coloring& c1, const Coloring& c2) {
    if (deadline.expired()) throw TimedOut{};
    const std::size_t k = color_count(c1);
    std::vector<std::size_t> sizes(k, 0);
    for (auto col : c1) ++sizes[col];
    std::optional<std::uint32_t> target;
    for (std::uint32_t col = 0; col < k; ++col) {
      if (sizes[col] > 1 && (!target || sizes[col] < sizes[*target])) target = col;
    }
    if (!target) return check_discrete(c1, c2);

    const auto v = static_cast<std::uint32_t>(std::find(c1.begin(), c1.end(), *target) - c1.begin());
    const Graph* gs[] = {&g1, &g2};
    for (std::uint32_t w = 0; w < g2.vertex_count(); ++w) {
      if (c2[w] != *target) continue;
      Coloring cs[2] = {c1, c2};
      cs[0][v] = static_cast<std::uint32_t>(k);
      cs[1][w] = static_cast<std::uint32_t>(k);
      if (refine(gs, cs, &deadline) && run(cs[0], cs[1])) return true;
    }
    return false;
  }

  bool check_discrete(const Coloring& c1, const Coloring& c2) {
    std::vector<std::uint32_t> by_color(c2.size());
    for (std::uint32_t w = 0; w < c2.size(); ++w) by_color[c2[w]] = w;
    std::vector<std::uint32_t> m(c1.size());
    for (std::uint32_t v = 0; v < c1.size(); ++v) m[v] = by_color[c1[v]];
    for (std::uint32_t v = 0; v < g1.vertex_count(); ++v) {
      for (auto x : g1.neighbors(v)) {
        if (!g2.adjacent(m[v], m[x])) return false;
      }
    }
    mapping = std::move(m);
    return true;
  }
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

IsomorphismResult verdict_no(std::string witness) { return {IsoVerdict::no, {}, std::move(witness)}; }

}  // namespace

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::yes: return "yes";
    case IsoVerdict::no: return "no";
    case IsoVerdict::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<std::vector<std::uint64_t>> individualization_invariant(const Graph& g, unsigned depth) {
  return invariant_with_deadline(g, depth, nullptr);
}

IsomorphismResult isomorphic(const Graph& g1, const Graph& g2, std::chrono::milliseconds budget) {
  if (g1.vertex_count() != g2.vertex_count()) return verdict_no("vertex count");
  if (g1.edge_count() != g2.edge_count()) return verdict_no("edge count");
  if (degree_sequence(g1) != degree_sequence(g2)) return verdict_no("degree sequence");

  const Deadline deadline{Clock::now() + budget};
  try {
    Coloring cs[2] = {Coloring(g1.vertex_count(), 0), Coloring(g2.vertex_count(), 0)};
    const Graph* gs[] = {&g1, &g2};
    if (!refine(gs, cs, &deadline)) return verdict_no("colour refinement");

    if (g1.vertex_count() <= 512 &&
        invariant_with_deadline(g1, 1, &deadline) != invariant_with_deadline(g2, 1, &deadline)) {
      return verdict_no("individualisation invariant (depth 1)");
    }
    Search search{g1, g2, deadline, {}};
    if (search.run(cs[0], cs[1])) return {IsoVerdict::yes, std::move(search.mapping), {}};
    return verdict_no("exhaustive individualisation search");
  } catch (const TimedOut&) {
    return {IsoVerdict::unknown, {}, "budget exhausted"};
  }
}

std::uint32_t LinearEquivalence::apply(std::uint32_t x) const {
  std::uint32_t y = 0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if ((x >> i) & 1) y ^= columns[i];
  }
  return y;
}

namespace {

// Row-reduced basis that remembers which inserted vectors make up each row.
class TrackedBasis {
 public:
  void insert(std::uint32_t v, std::uint64_t tag) {
    auto [r, mask] = reduce(v);
    rows_.push_back({r, mask ^ tag});
  }
  /// Residue and the combination of inserted vectors cancelled against.
  std::pair<std::uint32_t, std::uint64_t> reduce(std::uint32_t v) const {
    std::uint64_t mask = 0;
    for (const auto& row : rows_) {
      const auto pivot = 31 - std::countl_zero(row.bits);
      if ((v >> pivot) & 1) {
        v ^= row.bits;
        mask ^= row.mask;
      }
    }
    return {v, mask};
  }
  void pop() { rows_.pop_back(); }

 private:
  struct Row {
    std::uint32_t bits;
    std::uint64_t mask;
  };
  std::vector<Row> rows_;
};

struct LinearSearch {
  std::vector<std::uint32_t> basis_order;            // elements of `first` used as free basis
  std::vector<std::vector<std::uint32_t>> forced;    // elements newly in span at each depth
  std::vector<std::size_t> span_hits;                // |first ∩ span| after each depth
  std::span<const std::uint32_t> second;
  std::vector<bool> in_second;                       // indexed by element
  Deadline deadline;
  std::uint64_t nodes = 0;

  std::vector<std::uint32_t> images;                 // image of basis_order[j]
  std::vector<bool> used;                            // indexed by element

  std::uint32_t image_of(const TrackedBasis& pre, std::uint32_t x) const {
    const auto [residue, mask] = pre.reduce(x);
    std::uint32_t y = 0;
    for (std::size_t j = 0; j < images.size(); ++j) {
      if ((mask >> j) & 1) y ^= images[j];
    }
    (void)residue;
    return y;
  }

  bool run(TrackedBasis& pre, TrackedBasis& post) {
    const std::size_t depth = images.size();
    if (depth == basis_order.size()) return true;
    if ((++nodes & 1023) == 0 && deadline.expired()) throw TimedOut{};
    const std::uint32_t x = basis_order[depth];
    for (auto y : second) {
      if (used[y]) continue;
      if (post.reduce(y).first == 0) continue;  // keeps L injective
      images.push_back(y);
      pre.insert(x, std::uint64_t{1} << depth);
      post.insert(y, 0);
      std::vector<std::uint32_t> marked{y};
      used[y] = true;
      bool ok = true;
      for (auto f : forced[depth]) {
        const auto fy = image_of(pre, f);
        if (!in_second[fy] || used[fy]) {
          ok = false;
          break;
        }
        used[fy] = true;
        marked.push_back(fy);
      }
      if (ok) {
        std::size_t hits = 0;
        for (auto s : second) hits += post.reduce(s).first == 0;
        ok = hits == span_hits[depth];
      }
      if (ok && run(pre, post)) return true;
      for (auto mk : marked) used[mk] = false;
      pre.pop();
      post.pop();
      images.pop_back();
    }
    return false;
  }
};

}  // namespace

LinearEquivalence linear_cayley_equivalence(unsigned m, std::span<const std::uint32_t> first,
                                            std::span<const std::uint32_t> second, std::chrono::milliseconds budget) {
  if (m > 20) throw BudgetExceeded("linear equivalence above Z_2^20");
  const std::uint32_t limit = std::uint32_t{1} << m;
  for (auto x : first) {
    if (x >= limit) throw InvalidArgument("element outside Z_2^m");
  }
  for (auto x : second) {
    if (x >= limit) throw InvalidArgument("element outside Z_2^m");
  }
  if (first.size() != second.size()) return {IsoVerdict::no, {}};

  std::vector<std::uint64_t> wide_first(first.begin(), first.end()), wide_second(second.begin(), second.end());
  if (Gf2Basis(wide_first).rank() != m) throw InvalidArgument("first set does not span Z_2^m");
  if (Gf2Basis(wide_second).rank() != m) return {IsoVerdict::no, {}};

  // Greedy basis order: each new basis element maximises the number of
  // elements of `first` that become determined.
  LinearSearch search;
  search.second = second;
  search.in_second.assign(limit, false);
  search.used.assign(limit, false);
  for (auto y : second) search.in_second[y] = true;
  search.deadline = Deadline{Clock::now() + budget};
  {
    Gf2Basis span;
    std::vector<bool> covered(first.size(), false);
    std::size_t hits = 0;
    while (span.rank() < m) {
      std::size_t best = first.size(), best_gain = 0;
      for (std::size_t i = 0; i < first.size(); ++i) {
        if (covered[i]) continue;
        Gf2Basis trial = span;
        trial.insert(first[i]);
        std::size_t gain = 0;
        for (std::size_t j = 0; j < first.size(); ++j) gain += !covered[j] && trial.contains(first[j]);
        if (best == first.size() || gain > best_gain) best = i, best_gain = gain;
      }
      span.insert(first[best]);
      search.basis_order.push_back(first[best]);
      std::vector<std::uint32_t> now;
      for (std::size_t j = 0; j < first.size(); ++j) {
        if (!covered[j] && span.contains(first[j])) {
          covered[j] = true;
          ++hits;
          if (j != best) now.push_back(first[j]);
        }
      }
      search.forced.push_back(std::move(now));
      search.span_hits.push_back(hits);
    }
  }

  try {
    TrackedBasis pre, post;
    if (!search.run(pre, post)) return {IsoVerdict::no, {}};
  } catch (const TimedOut&) {
    return {IsoVerdict::unknown, {}};
  }

  // Recover L(e_i) from the basis images by solving over the preimage basis.
  TrackedBasis pre;
  for (std::size_t j = 0; j < search.basis_order.size(); ++j) pre.insert(search.basis_order[j], std::uint64_t{1} << j);
  LinearEquivalence out{IsoVerdict::yes, {}};
  for (unsigned i = 0; i < m; ++i) out.columns.push_back(search.image_of(pre, std::uint32_t{1} << i));
  return out;
}

}  // namespace cosetforge
