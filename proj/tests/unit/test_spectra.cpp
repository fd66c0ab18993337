#include "doctest.h"

#include "cosetforge/additive_code.hpp"
#include "cosetforge/coset_analysis.hpp"
#include "cosetforge/dodecacode.hpp"
#include "cosetforge/error.hpp"
#include "cosetforge/graph.hpp"
#include "cosetforge/spectra.hpp"

using namespace cosetforge;

namespace {

const AdditiveCode& dminus() {
  static const AdditiveCode c = dodecacode::punctured_code();
  return c;
}

AssociationSchemeData coset_scheme() {
  const auto s = coset_connecting_set(dminus());
  return scheme_from_cayley_drg(10, s);
}

AssociationSchemeData distance_scheme() {
  const auto words = trace_dual(dminus()).codewords();
  return distance_scheme_on_code(words);
}

using Matrix = std::vector<std::vector<std::int64_t>>;

}  // namespace

TEST_CASE("small spectra") {
  CHECK(wht_spectrum(2, std::vector<std::uint32_t>{1, 2, 3}).to_string() == "{3^1,-1^3}");
  CHECK(wht_spectrum(3, std::vector<std::uint32_t>{1, 2, 4}).to_string() == "{3^1,1^3,-1^3,-3^1}");
  CHECK_THROWS_AS(wht_spectrum(2, std::vector<std::uint32_t>{}), InvalidArgument);
  CHECK(character_sums(1, std::vector<std::uint32_t>{1}) == std::vector<std::int64_t>{1, -1});
  const std::vector<std::int64_t> values = {2, -1, 2, -1, -1, -1};
  const auto s = Spectrum::from_values(values);
  CHECK(s.multiplicity(2) == 2);
  CHECK(s.trace() == 0);
  CHECK(s.trace_of_square() == 12);
}

TEST_CASE("spectrum of the coset graph") {
  const auto s = wht_spectrum(10, coset_connecting_set(dminus()));
  CHECK(s.to_string() == "{33^1,9^198,1^495,-7^330}");
  CHECK(s.trace() == 0);
  CHECK(s.satisfies_trace_identities(1024, 16896));
  CHECK(spectrum_from_dual_weights(11, weight_distribution(trace_dual(dminus()))) == s);
  const std::vector<std::uint32_t> listed(dodecacode::kCayleyConnectingSet.begin(), dodecacode::kCayleyConnectingSet.end());
  CHECK(wht_spectrum(10, listed) == s);
}

TEST_CASE("spectrum from dual weights") {
  const auto d9 = WeightDistribution::from_entries(9, {{0, 1}, {6, 36}, {8, 27}});
  CHECK(spectrum_from_dual_weights(9, d9).to_string() == "{27^1,3^36,-5^27}");
  CHECK(spectrum_from_dual_weights(4, WeightDistribution::from_entries(4, {{0, 1}})).to_string() == "{12^1}");
}

TEST_CASE("strongly regular parameters from spectra") {
  CHECK(srg_params_from_spectrum(Spectrum({{495, 1}, {15, 528}, {-17, 495}})).to_string() == "(1024,495,238,240)");
  CHECK(srg_params_from_spectrum(Spectrum({{27, 1}, {3, 36}, {-5, 27}})).to_string() == "(64,27,10,12)");
  CHECK_THROWS_AS(srg_params_from_spectrum(Spectrum({{3, 1}, {-1, 3}})), NotStronglyRegular);
}

TEST_CASE("schemes of small Cayley graphs") {
  const auto c4 = scheme_from_cayley_drg(2, std::vector<std::uint32_t>{1, 2});
  CHECK(c4.p == Matrix{{1, 2, 1}, {1, 0, -1}, {1, -2, 1}});
  const auto h3 = scheme_from_cayley_drg(3, std::vector<std::uint32_t>{1, 2, 4});
  CHECK(h3.p == Matrix{{1, 3, 3, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -3, 3, -1}});
  CHECK(verify_duality(c4, c4).ok);
  const std::vector<BitVec> rep = {BitVec::from_string("000"), BitVec::from_string("111")};
  CHECK(distance_scheme_on_code(rep).classes() == 1);
}

TEST_CASE("coset and distance schemes") {
  const auto coset = coset_scheme();
  CHECK(coset.p == Matrix{{1, 33, 495, 495}, {1, 9, 15, -25}, {1, 1, -17, 15}, {1, -7, 15, -9}});
  CHECK(coset.multiplicities == std::vector<std::uint64_t>{1, 198, 495, 330});
  const auto dist = distance_scheme();
  CHECK(dist.valencies == std::vector<std::uint64_t>{1, 198, 495, 330});
  CHECK(dist.p == Matrix{{1, 198, 495, 330}, {1, 54, 15, -70}, {1, 6, -17, 10}, {1, -10, 15, -6}});
  CHECK(verify_duality(coset, dist).ok);
  CHECK(srg_check(relation_graph(dist, 2)).to_string() == "(1024,495,238,240)");
  auto permuted = dist;
  std::swap(permuted.p[1], permuted.p[2]);
  std::swap(permuted.multiplicities[1], permuted.multiplicities[2]);
  CHECK_FALSE(verify_duality(coset, permuted).ok);
}
