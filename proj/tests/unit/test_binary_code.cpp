#include "doctest.h"

#include <random>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/binary_code.hpp"
#include "cosetforge/coset_analysis.hpp"
#include "cosetforge/dodecacode.hpp"
#include "cosetforge/error.hpp"
#include "cosetforge/graph.hpp"

using namespace cosetforge;

namespace {

BinaryLinearCode binary_code(std::size_t n, std::initializer_list<const char*> rows) {
  std::vector<BitVec> v;
  for (const char* r : rows) v.push_back(BitVec::from_string(r));
  return BinaryLinearCode::from_generators(n, v);
}

BinaryLinearCode random_binary_code(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
  std::vector<BitVec> v;
  for (std::size_t i = 0; i < rows; ++i) v.push_back(BitVec(n, rng() & low_mask(n)));
  return BinaryLinearCode::from_generators(n, v);
}

WeightDistribution brute_distribution(const BinaryLinearCode& c) {
  WeightDistribution wd(c.length());
  for (const auto& x : c.codewords()) wd.add(x.weight());
  return wd;
}

}  // namespace

TEST_CASE("phi map") {
  CHECK(phi_map(Gf4Vec::from_string("1")).to_string() == "011");
  CHECK(phi_map(Gf4Vec::from_string("w")).to_string() == "110");
  CHECK(phi_map(Gf4Vec::from_string("0")).to_string() == "000");
  CHECK(phi_map(Gf4Vec::from_string("W")).to_string() == "101");
  for (std::uint64_t p = 0; p < 256; ++p) {
    const auto x = Gf4Vec::from_packed(4, p);
    CHECK(phi_map(x).weight() == 2 * x.weight());
    for (std::uint64_t q = 0; q < 256; q += 7) {
      const auto y = Gf4Vec::from_packed(4, q);
      CHECK(phi_map(x + y) == (phi_map(x) ^ phi_map(y)));
      CHECK(dot(phi_map(x), phi_map(y)) == trace_ip(x, y));
    }
  }
}

TEST_CASE("lifted leaders keep weight and syndrome") {
  const auto dm = dodecacode::punctured_code();
  const auto table = build_syndrome_table(dm);
  const auto b = phi_dual_construction(dm);
  for (std::uint32_t s = 0; s < table.coset_count(); ++s) {
    const auto lifted = lift_leader(table.leader(s));
    CHECK(lifted.weight() == table.leader_weight(s));
    CHECK(b.syndrome(lifted) == s);
  }
}

TEST_CASE("phi construction") {
  const auto dm = dodecacode::punctured_code();
  const auto b = phi_dual_construction(dm);
  CHECK(b.length() == 33);
  CHECK(b.dimension() == 23);
  CHECK(minimum_distance(b) == 3);
  CHECK(binary_weight_distribution(b.dual()).to_string() == "[<0,1>,<12,198>,<16,495>,<20,330>]");
  CHECK(binary_coset_graph(b) == coset_graph(dm));
  CHECK(external_distance(b) == 3);

  const auto p3 = puncture(puncture(dm, 8), 6);
  const auto b3 = phi_dual_construction(p3);
  CHECK(b3.length() == 27);
  CHECK(b3.dimension() == 21);
  CHECK(binary_weight_distribution(b3.dual()).to_string() == "[<0,1>,<12,36>,<16,27>]");
  CHECK(srg_check(binary_coset_graph(b3)).to_string() == "(64,27,10,12)");

  const auto full = phi_dual_construction(AdditiveCode::full_space(2));
  CHECK(full.dimension() == 6);
}

TEST_CASE("weight distributions and MacWilliams") {
  const auto rep = binary_code(3, {"111"});
  CHECK(binary_weight_distribution(rep).to_string() == "[<0,1>,<3,1>]");
  CHECK(macwilliams_binary(binary_weight_distribution(rep), 3, 2).to_string() == "[<0,1>,<2,3>]");
  CHECK(binary_weight_distribution(BinaryLinearCode::from_generators(4, std::vector<BitVec>{})).to_string() == "[<0,1>]");
  CHECK(krawtchouk(3, 1, 0) == 3);
  CHECK(krawtchouk(3, 1, 3) == -3);
  CHECK_THROWS_AS(macwilliams_binary(binary_weight_distribution(rep), 3, 3), InvalidArgument);
  CHECK_THROWS_AS(macwilliams_binary(WeightDistribution::from_entries(3, {{0, 1}, {1, 2}}), 3, 3), NonIntegralSolution);
}

TEST_CASE("MacWilliams transform is an involution") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + rng() % 12;
    const auto c = random_binary_code(rng, n, 1 + rng() % (n - 1));
    const auto wd = binary_weight_distribution(c);
    CHECK(wd == brute_distribution(c));
    const auto dual = macwilliams_binary(wd, n, c.size());
    CHECK(dual == binary_weight_distribution(c.dual()));
    CHECK(macwilliams_binary(dual, n, c.dual().size()) == wd);
  }
}

TEST_CASE("B-minus distribution by MacWilliams") {
  const auto b = phi_dual_construction(dodecacode::punctured_code());
  const auto wd = macwilliams_binary(binary_weight_distribution(b.dual()), 33, 1024);
  CHECK(wd.entries().size() == 28);
  CHECK(wd[3] == 11);
  CHECK(wd[16] == 1156023);
  CHECK(wd[17] == 1156023);
  CHECK(wd[33] == 1);
  CHECK(wd == binary_weight_distribution(b));
}

TEST_CASE("coset enumeration through the dual") {
  const auto rep = binary_code(3, {"111"});
  for (const char* r : {"000", "100", "010", "001"}) {
    const auto x = BitVec::from_string(r);
    CHECK(coset_enumerator_via_dual(rep, x) == brute_force_coset_distribution(rep, x));
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4 + rng() % 13;
    const auto c = random_binary_code(rng, n, rng() % n);
    if (c.size() > (1u << 16)) continue;
    const DualCosetEnumerator e(c);
    for (int k = 0; k < 5; ++k) {
      const BitVec x(n, rng() & low_mask(n));
      CHECK(e.distribution(x) == brute_force_coset_distribution(c, x));
    }
  }
}

TEST_CASE("lifted profiles of B-minus") {
  const auto dm = dodecacode::punctured_code();
  const auto table = build_syndrome_table(dm);
  const auto b = phi_dual_construction(dm);
  const auto profiles = lifted_coset_profiles(b, table);
  CHECK(profiles.size() == 1024);
  CHECK(is_completely_regular(profiles));
  CHECK(profiles[0].distribution == binary_weight_distribution(b));
  CHECK_THROWS_AS(uniformly_packed_check(3, profiles), NotUniformlyPacked);
}

TEST_CASE("psi diagram") {
  CHECK(verify_psi_diagram(AdditiveCode::from_generators(std::vector<Gf4Vec>{Gf4Vec::from_string("1")})));
  CHECK(verify_psi_diagram(AdditiveCode::full_space(1)));
  CHECK(verify_psi_diagram(
      AdditiveCode::from_generators(std::vector<Gf4Vec>{Gf4Vec::from_string("10"), Gf4Vec::from_string("0w")})));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Gf4Vec> rows;
    const std::size_t count = rng() % (2 * n + 1);
    for (std::size_t i = 0; i < count; ++i) rows.push_back(Gf4Vec::from_packed(n, rng() & low_mask(2 * n)));
    CHECK(verify_psi_diagram(AdditiveCode::from_generators(n, rows)));
  }
  CHECK_THROWS_AS(verify_psi_diagram(AdditiveCode::zero_code(5)), BudgetExceeded);
}

TEST_CASE("Hamming code coset graph is complete") {
  const auto h = binary_code(7, {"1000110", "0100011", "0010111", "0001101"});
  CHECK(h.dimension() == 4);
  const auto g = binary_coset_graph(h);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 28);
}
