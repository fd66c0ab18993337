#include "cosetforge/graph.hpp"

#include <algorithm>
#include <set>

#include "cosetforge/error.hpp"

namespace cosetforge {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_vertex_count(std::size_t n) {
  if (n > kMaxGraphVertices) throw BudgetExceeded("graph exceeds the dense adjacency budget");
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  check_vertex_count(vertex_count);
  Graph g;
  g.n_ = vertex_count;
  g.words_ = words_for(vertex_count);
  g.rows_.assign(g.n_ * g.words_, 0);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("loop in edge list");
    g.rows_[u * g.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    g.rows_[v * g.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  g.build_csr();
  return g;
}

Graph Graph::from_rows(std::size_t vertex_count, std::vector<std::uint64_t> rows) {
  check_vertex_count(vertex_count);
  Graph g;
  g.n_ = vertex_count;
  g.words_ = words_for(vertex_count);
  if (rows.size() != g.n_ * g.words_) throw InvalidArgument("adjacency rows of wrong size");
  g.rows_ = std::move(rows);
  g.build_csr();
  for (std::uint32_t u = 0; u < g.n_; ++u) {
    if (g.adjacent(u, u)) throw InvalidArgument("loop in adjacency rows");
    for (auto v : g.neighbors(u)) {
      if (!g.adjacent(v, u)) throw InvalidArgument("adjacency rows are not symmetric");
    }
  }
  return g;
}

void Graph::build_csr() {
  offsets_.assign(n_ + 1, 0);
  neighbors_.clear();
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t word = rows_[u * words_ + k];
      while (word != 0) {
        const auto bit = static_cast<std::uint32_t>(std::countr_zero(word));
        const auto v = static_cast<std::uint32_t>(k * 64 + bit);
        if (v < n_) neighbors_.push_back(v);
        word &= word - 1;
      }
    }
    offsets_[u + 1] = static_cast<std::uint32_t>(neighbors_.size());
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < n_; ++u) {
    for (auto v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const std::size_t d = degree(0);
  for (std::uint32_t v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<int> dist;
  std::vector<std::uint32_t> queue;
  kernels::bfs_distances(csr(), 0, dist, queue);
  return queue.size() == n_;
}

Graph Graph::induced(std::span<const std::uint32_t> vertices) const {
  std::vector<Edge> sub;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    for (std::uint32_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) sub.emplace_back(i, j);
    }
  }
  return from_edges(vertices.size(), sub);
}

Graph Graph::relabelled(std::span<const std::uint32_t> mapping) const {
  if (mapping.size() != n_) throw InvalidArgument("relabelling of wrong size");
  auto list = edges();
  for (auto& [u, v] : list) {
    u = mapping[u];
    v = mapping[v];
  }
  return from_edges(n_, list);
}

Graph cayley_graph_z2(unsigned m, std::span<const std::uint32_t> connecting_set) {
  if (m > 20) throw BudgetExceeded("Cayley graph dimension above 20");
  const std::size_t n = std::size_t{1} << m;
  check_vertex_count(n);
  std::set<std::uint32_t> seen;
  for (auto s : connecting_set) {
    if (s == 0) throw InvalidArgument("connecting set contains 0");
    if (s >= n) throw InvalidArgument("connecting set element outside Z_2^m");
    if (!seen.insert(s).second) throw InvalidArgument("duplicate connecting set element");
  }
  const std::size_t words = words_for(n);
  std::vector<std::uint64_t> rows(n * words, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (auto s : connecting_set) {
      const std::size_t v = u ^ s;
      rows[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph cayley_graph_z2(unsigned m, std::span<const BitVec> connecting_set) {
  std::vector<std::uint32_t> ints;
  for (const auto& s : connecting_set) {
    if (s.size() != m) throw LengthMismatch("connecting set element of wrong length");
    ints.push_back(static_cast<std::uint32_t>(s.bits()));
  }
  return cayley_graph_z2(m, ints);
}

std::vector<std::uint32_t> coset_connecting_set(const AdditiveCode& code) {
  const std::size_t n = code.length();
  const auto check_rows = trace_dual(code).canonical_basis();
  if (check_rows.size() > 20) throw BudgetExceeded("syndrome space above 2^20");
  std::vector<std::uint32_t> out;
  std::set<std::uint32_t> seen;
  for (std::size_t j = 0; j < n; ++j) {
    for (Gf4 alpha : {Gf4::one(), Gf4::w(), Gf4::w2()}) {
      Gf4Vec e(n);
      e.set(j, alpha);
      const auto s = static_cast<std::uint32_t>(star_product(check_rows, e).bits());
      if (s == 0 || !seen.insert(s).second) {
        throw MinDistanceTooSmall("code has a nonzero word of weight at most 2");
      }
      out.push_back(s);
    }
  }
  return out;
}

Graph coset_graph(const AdditiveCode& code) {
  if (code.rank() == 2 * code.length()) return Graph::from_edges(1, std::vector<Edge>{});
  const auto set = coset_connecting_set(code);
  const auto m = static_cast<unsigned>(2 * code.length() - code.rank());
  return cayley_graph_z2(m, set);
}

Graph hamming_graph(std::size_t n, std::size_t q) {
  if (q < 1) throw InvalidArgument("alphabet size must be positive");
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= q;
    if (count > kMaxGraphVertices) throw BudgetExceeded("Hamming graph exceeds the dense adjacency budget");
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t place = 1;
    for (std::size_t i = 0; i < n; ++i, place *= q) {
      const std::size_t digit = (v / place) % q;
      for (std::size_t other = digit + 1; other < q; ++other) {
        edges.emplace_back(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v + (other - digit) * place));
      }
    }
  }
  return Graph::from_edges(count, edges);
}

std::vector<std::vector<std::uint32_t>> distance_partition(const Graph& g, std::uint32_t v) {
  if (v >= g.vertex_count()) throw IndexOutOfRange("vertex out of range");
  std::vector<int> dist;
  std::vector<std::uint32_t> queue;
  kernels::bfs_distances(g.csr(), v, dist, queue);
  if (queue.size() != g.vertex_count()) throw Disconnected("graph is disconnected");
  std::vector<std::vector<std::uint32_t>> layers(static_cast<std::size_t>(dist[queue.back()]) + 1);
  for (auto x : queue) layers[dist[x]].push_back(x);
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

std::vector<std::size_t> successive_degrees(const Graph& g, std::uint32_t v) {
  std::vector<std::size_t> out;
  for (const auto& layer : distance_partition(g, v)) out.push_back(layer.size());
  return out;
}

std::vector<std::uint64_t> IntersectionArray::valencies() const {
  std::vector<std::uint64_t> k{1};
  for (std::size_t i = 0; i < b.size() && i < c.size(); ++i) {
    const std::uint64_t num = k.back() * b[i];
    if (c[i] == 0 || num % c[i] != 0) return {};
    k.push_back(num / c[i]);
  }
  return k;
}

std::string IntersectionArray::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  s += ";";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

IntersectionArray drg_check(const Graph& g) {
  const auto census = kernels::parallel::distance_regularity_census(g.csr());
  if (!census.connected) throw Disconnected("graph is disconnected");
  if (census.violation) {
    const auto& w = *census.violation;
    throw NotDistanceRegular("pair (" + std::to_string(w.u) + ", " + std::to_string(w.v) + ") at distance " +
                                 std::to_string(w.distance) + " breaks distance-regularity",
                             w.u, w.v, w.distance);
  }
  IntersectionArray out;
  const std::size_t d = census.b.empty() ? 0 : census.b.size() - 1;
  out.b.assign(census.b.begin(), census.b.begin() + static_cast<std::ptrdiff_t>(d));
  out.c.assign(census.c.begin() + 1, census.c.end());
  return out;
}

bool SrgParams::feasible() const {
  if (!mu) return v == k + 1;
  return k * (k - lambda - 1) == (v - k - 1) * *mu;
}

std::string SrgParams::to_string() const {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         (mu ? std::to_string(*mu) : std::string("-")) + ")";
}

SrgParams srg_check(const Graph& g) {
  const auto degree = g.regular_degree();
  if (!degree) throw NotStronglyRegular("graph is not regular");
  if (!g.is_connected()) throw Disconnected("graph is disconnected");
  const auto cn = kernels::parallel::common_neighbor_census(g.rows());
  SrgParams out{g.vertex_count(), *degree, 0, std::nullopt};
  if (cn.adjacent_pairs > 0) {
    if (cn.adjacent_min != cn.adjacent_max) {
      throw NotStronglyRegular("adjacent pairs (" + std::to_string(cn.adjacent_min_at.u) + "," +
                               std::to_string(cn.adjacent_min_at.v) + ") and (" +
                               std::to_string(cn.adjacent_max_at.u) + "," + std::to_string(cn.adjacent_max_at.v) +
                               ") have different common-neighbour counts");
    }
    out.lambda = cn.adjacent_min;
  }
  if (cn.nonadjacent_pairs > 0) {
    if (cn.nonadjacent_min != cn.nonadjacent_max) {
      throw NotStronglyRegular("non-adjacent pairs (" + std::to_string(cn.nonadjacent_min_at.u) + "," +
                               std::to_string(cn.nonadjacent_min_at.v) + ") and (" +
                               std::to_string(cn.nonadjacent_max_at.u) + "," +
                               std::to_string(cn.nonadjacent_max_at.v) + ") have different common-neighbour counts");
    }
    out.mu = cn.nonadjacent_min;
  }
  return out;
}

Graph distance_k_graph(const Graph& g, std::size_t k) {
  if (k == 0) throw InvalidArgument("distance-0 graph would consist of loops");
  if (!g.is_connected()) throw Disconnected("graph is disconnected");
  return Graph::from_rows(g.vertex_count(), kernels::parallel::distance_k_rows(g.csr(), k, g.words_per_row()));
}

std::size_t diameter(const Graph& g) {
  std::size_t d = 0;
  std::vector<int> dist;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    kernels::bfs_distances(g.csr(), u, dist, queue);
    if (queue.size() != g.vertex_count()) throw Disconnected("graph is disconnected");
    d = std::max(d, static_cast<std::size_t>(dist[queue.back()]));
  }
  return d;
}

}  // namespace cosetforge
