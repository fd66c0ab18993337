#include "doctest.h"

#include "cosetforge/dodecacode.hpp"
#include "cosetforge/error.hpp"
#include "cosetforge/graph.hpp"

using namespace cosetforge;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cube() {
  const std::vector<std::uint32_t> s = {1, 2, 4};
  return cayley_graph_z2(3, s);
}

Graph k4() {
  const std::vector<std::uint32_t> s = {1, 2, 3};
  return cayley_graph_z2(2, s);
}

const Graph& gamma() {
  static const Graph g = coset_graph(dodecacode::punctured_code());
  return g;
}

}  // namespace

TEST_CASE("graph construction") {
  const auto g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<Edge>{{0, 2}}), InvalidArgument);
  const std::vector<std::uint32_t> swap = {2, 1, 0};
  CHECK(g.relabelled(swap) == g);
  const std::vector<std::uint32_t> keep = {0, 1};
  CHECK(g.induced(keep).edge_count() == 1);
}

TEST_CASE("small Cayley and Hamming graphs") {
  CHECK(k4() == hamming_graph(1, 4));
  CHECK(cube() == hamming_graph(3, 2));
  CHECK(drg_check(hamming_graph(2, 2)) == drg_check(cycle(4)));
  CHECK(hamming_graph(2, 4).vertex_count() == 16);
  CHECK(hamming_graph(2, 4).regular_degree() == 6);
  CHECK_THROWS_AS(cayley_graph_z2(2, std::vector<std::uint32_t>{0, 1}), InvalidArgument);
  CHECK_THROWS_AS(cayley_graph_z2(2, std::vector<std::uint32_t>{1, 1}), InvalidArgument);
  CHECK_THROWS_AS(cayley_graph_z2(2, std::vector<std::uint32_t>{4}), InvalidArgument);
}

TEST_CASE("successive degrees and intersection arrays") {
  CHECK(successive_degrees(k4(), 2) == std::vector<std::size_t>{1, 3});
  CHECK(successive_degrees(cube(), 5) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(drg_check(cycle(4)).to_string() == "{2,1;1,2}");
  CHECK(drg_check(cube()).to_string() == "{3,2,1;1,2,3}");
  CHECK(drg_check(cube()).valencies() == std::vector<std::uint64_t>{1, 3, 3, 1});
  CHECK_THROWS_AS(drg_check(path(3)), NotDistanceRegular);
  CHECK_THROWS_AS(drg_check(Graph::from_edges(2, std::vector<Edge>{})), Disconnected);
}

TEST_CASE("strongly regular graphs") {
  const auto kp = srg_check(k4());
  CHECK(kp.v == 4);
  CHECK(kp.k == 3);
  CHECK(kp.lambda == 2);
  CHECK_FALSE(kp.mu.has_value());
  CHECK(srg_check(hamming_graph(2, 4)).to_string() == "(16,6,2,2)");
  CHECK(srg_check(cycle(5)).to_string() == "(5,2,0,1)");
  CHECK_THROWS_AS(srg_check(path(4)), NotStronglyRegular);
}

TEST_CASE("distance-k graphs") {
  CHECK(distance_k_graph(cycle(5), 1) == cycle(5));
  const auto m = distance_k_graph(cycle(4), 2);
  CHECK(m.edge_count() == 2);
  CHECK(m.regular_degree() == 1);
}

TEST_CASE("coset graph of the punctured dodecacode") {
  const auto& g = gamma();
  CHECK(g.vertex_count() == 1024);
  CHECK(g.regular_degree() == 33);
  CHECK(g.edge_count() == 16896);
  CHECK(g.is_connected());
  CHECK(diameter(g) == 3);
  CHECK(successive_degrees(g, 0) == std::vector<std::size_t>{1, 33, 495, 495});
  CHECK(successive_degrees(g, 777) == std::vector<std::size_t>{1, 33, 495, 495});
  CHECK(drg_check(g).to_string() == "{33,30,15;1,2,15}");
  const auto d2 = distance_k_graph(g, 2);
  CHECK(d2.regular_degree() == 495);
  CHECK(srg_check(d2).to_string() == "(1024,495,238,240)");
}

TEST_CASE("listed Cayley graph on Z_2^10") {
  const std::vector<std::uint32_t> s(dodecacode::kCayleyConnectingSet.begin(), dodecacode::kCayleyConnectingSet.end());
  CHECK(drg_check(cayley_graph_z2(10, s)).to_string() == "{33,30,15;1,2,15}");
}

TEST_CASE("coset graphs of small codes") {
  const auto dm = dodecacode::punctured_code();
  const auto g = coset_graph(puncture(puncture(dm, 7), 3));
  CHECK(g.vertex_count() == 64);
  CHECK(g.regular_degree() == 27);
  CHECK(srg_check(g).to_string() == "(64,27,10,12)");
  const auto full = coset_graph(AdditiveCode::full_space(2));
  CHECK(full.vertex_count() == 1);
  CHECK(full.edge_count() == 0);
  const std::vector<Gf4Vec> rows = {Gf4Vec::from_string("10")};
  CHECK_THROWS_AS(coset_connecting_set(AdditiveCode::from_generators(rows)), MinDistanceTooSmall);
}
