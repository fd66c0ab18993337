#include "doctest.h"

#include "cosetforge/coset_analysis.hpp"
#include "cosetforge/dodecacode.hpp"
#include "cosetforge/error.hpp"
#include "cosetforge/graph.hpp"
#include "cosetforge/groups.hpp"

using namespace cosetforge;

namespace {

struct Fixture {
  AdditiveCode code = dodecacode::punctured_code();
  SyndromeTable table = build_syndrome_table(code);
  Graph graph = coset_graph(code);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

std::vector<Permutation> vertex_generators() {
  const auto& f = fixture();
  auto gens = translation_generators(10);
  for (const auto& m : dodecacode::monomial_generators()) gens.push_back(monomial_to_vertex_perm(m, f.code, f.table));
  return gens;
}

}  // namespace

TEST_CASE("permutations") {
  const auto p = Permutation::from_cycles(5, "(1 2 3)(4,5)");
  CHECK(p(0) == 1);
  CHECK(p(4) == 3);
  CHECK(p.order() == 6);
  CHECK(p.to_cycles() == "(1 2 3)(4 5)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation::identity(3).to_cycles() == "()");
  const auto a = Permutation::from_cycles(3, "(1 2)");
  const auto b = Permutation::from_cycles(3, "(2 3)");
  // a first, then b: 1 -> 2 -> 3.
  CHECK((a * b)(0) == 2);
  CHECK_THROWS_AS(Permutation(std::vector<std::uint16_t>{0, 0}), InvalidArgument);
}

TEST_CASE("Schreier-Sims orders") {
  CHECK(group_order({4, {Permutation::from_cycles(4, "(1 2)"), Permutation::from_cycles(4, "(1 2 3 4)")}}) == 24);
  CHECK(group_order({5, {}}) == 1);
  CHECK(group_order({5, {Permutation::from_cycles(5, "(1 2 3 4 5)"), Permutation::from_cycles(5, "(1 2 3)")}}) == 60);
  CHECK(group_order({8, translation_generators(3)}) == 8);
}

TEST_CASE("monomial group on weight-one words") {
  const auto gens = dodecacode::monomial_generators();
  const auto a = monomial_to_weight1_perm(gens[0]);
  const auto b = monomial_to_weight1_perm(gens[1]);
  CHECK(a == Permutation::from_cycles(33, dodecacode::kWeightOneActionA));
  CHECK(b == Permutation::from_cycles(33, dodecacode::kWeightOneActionB));
  CHECK(monomial_to_weight1_perm(MonomialMap::identity(11)).is_identity());
  const std::vector<Permutation> pair = {a, b};
  CHECK(group_order({33, pair}) == 54);
  CHECK(graph_group_closure(pair).size() == 54);
  CHECK(point_orbits(pair).size() > 1);
}

TEST_CASE("monomials act on the coset graph") {
  const auto& f = fixture();
  for (const auto& m : dodecacode::monomial_generators()) {
    const auto p = monomial_to_vertex_perm(m, f.code, f.table);
    CHECK(p(0) == 0);
    CHECK(is_automorphism(p, f.graph));
  }
  CHECK(monomial_to_vertex_perm(MonomialMap::identity(11), f.code, f.table).is_identity());
  std::vector<std::size_t> source(11);
  for (std::size_t i = 0; i < 11; ++i) source[i] = (i + 1) % 11;
  const MonomialMap shift(source, std::vector<Gf4>(11, Gf4::one()));
  CHECK_FALSE(stabilizes(f.code, shift));
  CHECK_THROWS_AS(monomial_to_vertex_perm(shift, f.code, f.table), NotAStabilizer);
}

TEST_CASE("translations") {
  const auto t = translation_generators(10);
  CHECK(graph_group_closure(t).size() == 1024);
  CHECK(vertex_stabilizer_order(graph_group_closure(t), 0) == 1);
  for (const auto& g : t) CHECK(is_automorphism(g, fixture().graph));
  CHECK_THROWS_AS(graph_group_closure(t, 100), LimitExceeded);
}

TEST_CASE("orbits of the graph group") {
  const auto gens = vertex_generators();
  CHECK(group_order({1024, gens}) == 55296);
  CHECK(point_orbits(gens).size() == 1);
  std::vector<std::size_t> sizes;
  for (const auto& o : edge_orbits(gens, fixture().graph)) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{3072, 13824});
}

TEST_CASE("group census") {
  const std::vector<Permutation> s3 = graph_group_closure(
      std::vector<Permutation>{Permutation::from_cycles(3, "(1 2)"), Permutation::from_cycles(3, "(1 2 3)")});
  const auto c = group_census(s3);
  CHECK(c.order == 6);
  CHECK_FALSE(c.abelian);
  CHECK(c.order_census.at(2) == 3);
  CHECK_FALSE(matches_c9_c3_c2(c));
}

TEST_CASE("fixed subgraph shapes") {
  CHECK(classify_fixed_subgraph(hamming_graph(2, 4), 1024) == FixedSubgraphClass::hamming_2_4);
  CHECK(classify_fixed_subgraph(hamming_graph(1, 4), 1024) == FixedSubgraphClass::k4);
  CHECK(classify_fixed_subgraph(Graph::from_edges(1, std::vector<Edge>{}), 1024) == FixedSubgraphClass::single_vertex);
  CHECK(classify_fixed_subgraph(Graph::from_edges(0, std::vector<Edge>{}), 1024) == FixedSubgraphClass::null_graph);
  CHECK(classify_fixed_subgraph(Graph::from_edges(4, std::vector<Edge>{}), 1024) == FixedSubgraphClass::edge_free_4);
  CHECK(to_string(FixedSubgraphClass::edge_free_4) == "edge-free on 4 vertices");
  CHECK_THROWS_AS(classify_fixed_subgraph(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), 1024), UnclassifiedSubgraph);
  const auto& g = fixture().graph;
  const std::vector<Permutation> id = {Permutation::identity(1024)};
  const auto cases = fixed_subgraph_classification(id, g);
  CHECK(cases.size() == 1);
  CHECK(cases.begin()->first == FixedSubgraphCase{1, FixedSubgraphClass::whole_graph});
  const std::vector<Permutation> t = {translation_generators(10)[3]};
  CHECK(fixed_subgraph_classification(t, g).begin()->first == FixedSubgraphCase{2, FixedSubgraphClass::null_graph});
}
