#include "doctest.h"

#include <random>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/binary_code.hpp"
#include "cosetforge/coset_analysis.hpp"
#include "cosetforge/dodecacode.hpp"
#include "cosetforge/error.hpp"

using namespace cosetforge;

namespace {

const AdditiveCode& dminus() {
  static const AdditiveCode c = dodecacode::punctured_code();
  return c;
}

const SyndromeTable& dminus_table() {
  static const SyndromeTable t = build_syndrome_table(dminus());
  return t;
}

}  // namespace

TEST_CASE("syndrome table of the punctured dodecacode") {
  const auto& t = dminus_table();
  CHECK(t.coset_count() == 1024);
  CHECK(t.weight_census() == std::vector<std::uint64_t>{1, 33, 495, 495});
  CHECK(t.covering_radius() == 3);
  CHECK(t.leader_weight(0) == 0);
  for (const auto& c : dminus().codewords()) {
    if (c.weight() <= 6) CHECK(t.syndrome(c) == 0);
  }
  for (std::uint32_t s = 0; s < 1024; ++s) {
    CHECK(t.syndrome(t.leader(s)) == s);
    CHECK(t.leader(s).weight() == t.leader_weight(s));
  }
  for (std::size_t i = 0; i < t.check_rows().size(); ++i) CHECK(t.syndrome(t.check_rows()[i]) == 0);
}

TEST_CASE("full space and zero code") {
  const auto full = build_syndrome_table(AdditiveCode::full_space(3));
  CHECK(full.coset_count() == 1);
  CHECK(full.weight_census() == std::vector<std::uint64_t>{1});
  const auto zero = AdditiveCode::zero_code(2);
  const auto t = build_syndrome_table(zero);
  CHECK(t.coset_count() == 16);
  for (const auto& p : coset_profiles(zero, t)) CHECK(p.distribution.total() == 1);
}

TEST_CASE("coset profiles and complete regularity") {
  const auto profiles = coset_profiles(dminus(), dminus_table());
  CHECK(profiles.size() == 1024);
  CHECK(profiles[0].distribution == weight_distribution(dminus()));
  const WeightDistribution* weight_one = nullptr;
  for (std::uint32_t s = 0; s < 1024; ++s) {
    CHECK(profiles[s].distribution == dminus_table().swept_distribution(s));
    if (profiles[s].coset_weight == 1) {
      if (weight_one == nullptr) weight_one = &profiles[s].distribution;
      CHECK(profiles[s].distribution == *weight_one);
    }
  }
  CHECK(is_completely_regular(profiles));
  CHECK(is_completely_regular(coset_profiles(AdditiveCode::full_space(2), build_syndrome_table(AdditiveCode::full_space(2)))));
}

TEST_CASE("random small codes are not completely regular") {
  std::mt19937_64 rng(3);
  std::vector<Gf4Vec> rows;
  for (int i = 0; i < 6; ++i) rows.push_back(Gf4Vec::from_packed(11, rng() & low_mask(22)));
  const auto c = AdditiveCode::from_generators(11, rows);
  CHECK_FALSE(is_completely_regular(coset_profiles(c, build_syndrome_table(c))));
}

TEST_CASE("uniform packing") {
  const auto profiles = coset_profiles(dminus(), dminus_table());
  CHECK(uniformly_packed_check(dminus(), profiles) == PackingConstants{4, 5});
  CHECK(lemma_lambda_mu(11, 4, 2, 198, 198) == PackingConstants{4, 5});
  CHECK(lemma_lambda_mu(11, 4, 2, 0, 0).lambda == 0);
  CHECK_THROWS_AS(lemma_lambda_mu(11, 4, 2, 198, 197), NonIntegralSolution);
}

TEST_CASE("perfect codes have no deeper cosets") {
  const std::vector<BitVec> rows = {BitVec::from_string("111")};
  const auto rep = BinaryLinearCode::from_generators(3, rows);
  std::vector<CosetProfile> profiles;
  for (const char* leader : {"000", "100", "010", "001"}) {
    const auto x = BitVec::from_string(leader);
    profiles.push_back({BitVec(2, rep.syndrome(x)), x.weight(), brute_force_coset_distribution(rep, x)});
  }
  CHECK(is_completely_regular(profiles));
  CHECK(uniformly_packed_check(3, profiles) == PackingConstants{1, 0});
}

TEST_CASE("family parameters") {
  CHECK(bzz_parameters(2) == BzzParameters{11, 5, 2, 4, 5});
  CHECK(bzz_parameters(3) == BzzParameters{43, 7, 2, 20, 21});
  CHECK(bzz_parameters(4) == BzzParameters{171, 9, 2, 84, 85});
  CHECK_THROWS_AS(bzz_parameters(1), InvalidArgument);
  CHECK(binomial(11, 2) == 55);
  CHECK(binomial(33, 16) == 1166803110);
}
