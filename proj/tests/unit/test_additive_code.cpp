#include "doctest.h"

#include <random>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/dodecacode.hpp"
#include "cosetforge/error.hpp"

using namespace cosetforge;

namespace {

AdditiveCode code_of(std::initializer_list<const char*> rows) {
  std::vector<Gf4Vec> v;
  for (const char* r : rows) v.push_back(Gf4Vec::from_string(r));
  return AdditiveCode::from_generators(v);
}

AdditiveCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
  std::vector<Gf4Vec> v;
  for (std::size_t i = 0; i < rows; ++i) v.push_back(Gf4Vec::from_packed(n, rng() & low_mask(2 * n)));
  return AdditiveCode::from_generators(n, v);
}

}  // namespace

TEST_CASE("generator spans") {
  CHECK(dodecacode::punctured_code().size() == 4096);
  CHECK(dodecacode::punctured_code().length() == 11);
  CHECK(code_of({"10"}).size() == 2);
  CHECK(code_of({"1", "w"}) == AdditiveCode::full_space(1));
  CHECK(code_of({"1w", "w1", "WW"}).rank() == 2);
  CHECK(code_of({"1w0"}).rank() == 1);
  CHECK_THROWS_AS(AdditiveCode::from_generators(3, std::vector<Gf4Vec>{Gf4Vec::from_string("10")}), LengthMismatch);
}

TEST_CASE("codewords form a group") {
  const auto c = code_of({"1w0", "0W1", "w0w"});
  const auto words = c.codewords();
  CHECK(words.size() == c.size());
  for (const auto& x : words) {
    for (const auto& y : words) CHECK(c.contains(x + y));
  }
}

TEST_CASE("cyclic construction") {
  const auto d = cyclic_additive_code(Gf4Vec::from_string(dodecacode::kCyclicGenerator));
  CHECK(d.size() == 4096);
  CHECK(minimum_distance(d) == 6);
  CHECK(d == dodecacode::full_code());
  CHECK(hamming_weight(Gf4Vec::from_string("w10100100101")) == 6);
  CHECK(cyclic_additive_code(Gf4Vec::from_string("1")).size() == 2);
  CHECK(cyclic_additive_code(Gf4Vec::from_string("11")).size() == 2);
}

TEST_CASE("punctures of the dodecacode") {
  const auto d = dodecacode::full_code();
  const auto table = weight_distribution(dodecacode::punctured_code());
  for (std::size_t i = 0; i < 12; ++i) {
    const auto p = puncture(d, i);
    CHECK(p.size() == 4096);
    CHECK(minimum_distance(p) == 5);
    CHECK(weight_distribution(p) == table);
  }
  const auto p3 = puncture(puncture(dodecacode::punctured_code(), 10), 0);
  CHECK(p3.length() == 9);
  CHECK(p3.size() == 4096);
  CHECK(puncture(code_of({"1"}), 0).length() == 0);
  CHECK(puncture(code_of({"1"}), 0).size() == 1);
}

TEST_CASE("weight distributions") {
  const auto dm = dodecacode::punctured_code();
  CHECK(weight_distribution(dm).to_string() == "[<0,1>,<5,198>,<6,198>,<7,990>,<8,495>,<9,1650>,<10,330>,<11,234>]");
  CHECK(weight_distribution(trace_dual(dm)).to_string() == "[<0,1>,<6,198>,<8,495>,<10,330>]");
  CHECK(trace_dual(dm).size() == 1024);
  CHECK(weight_distribution(AdditiveCode::zero_code(5)).to_string() == "[<0,1>]");
  CHECK(minimum_distance(dodecacode::full_code()) == 6);
  CHECK(minimum_distance(dm) == 5);
  CHECK(minimum_distance(code_of({"1"})) == 1);
  CHECK(minimum_distance(AdditiveCode::zero_code(3)) == 0);
}

TEST_CASE("trace duals") {
  CHECK(trace_dual(AdditiveCode::full_space(4)) == AdditiveCode::zero_code(4));
  CHECK(trace_dual(AdditiveCode::zero_code(4)) == AdditiveCode::full_space(4));
  const auto dm = dodecacode::punctured_code();
  CHECK(external_distance(dm) == 3);
  const auto p3 = puncture(puncture(dm, 5), 2);
  CHECK(trace_dual(p3).size() == 64);
  CHECK(weight_distribution(trace_dual(p3)).to_string() == "[<0,1>,<6,36>,<8,27>]");
  CHECK(external_distance(p3) == 2);
}

TEST_CASE("dual of the dual is the code") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const auto c = random_code(rng, n, rng() % (2 * n + 1));
    const auto d = trace_dual(c);
    CHECK(c.rank() + d.rank() == 2 * n);
    CHECK(trace_dual(d) == c);
    for (const auto& g : c.generators()) {
      for (const auto& h : d.generators()) CHECK_FALSE(trace_ip(g, h));
    }
  }
}

TEST_CASE("linearity") {
  CHECK_FALSE(is_linear(dodecacode::punctured_code()));
  CHECK(is_linear(AdditiveCode::full_space(3)));
  CHECK(is_linear(code_of({"11", "ww"})));
  CHECK_FALSE(is_linear(code_of({"11"})));
}

TEST_CASE("monomial maps") {
  const auto dm = dodecacode::punctured_code();
  for (const auto& m : dodecacode::monomial_generators()) CHECK(stabilizes(dm, m));
  CHECK(stabilizes(dm, MonomialMap::identity(11)));
  const MonomialMap m({1, 0}, {Gf4::w(), Gf4::one()});
  CHECK(m.apply(Gf4Vec::from_string("1W")).to_string() == "11");
  CHECK(m.then(m).apply(Gf4Vec::from_string("1W")).to_string() == "w1");
  CHECK(MonomialMap::from_matrix({{Gf4::zero(), Gf4::w()}, {Gf4::one(), Gf4::zero()}}) == m);
  CHECK_THROWS_AS(MonomialMap({0, 0}, {Gf4::one(), Gf4::one()}), InvalidArgument);
  CHECK_THROWS_AS(MonomialMap({0, 1}, {Gf4::one(), Gf4::zero()}), InvalidArgument);
  CHECK_FALSE(stabilizes(code_of({"10"}), MonomialMap({1, 0}, {Gf4::one(), Gf4::one()})));
}
