#include "doctest.h"

#include <random>

#include "cosetforge/error.hpp"
#include "cosetforge/gf2.hpp"
#include "cosetforge/gf4.hpp"

using namespace cosetforge;

namespace {

const Gf4 kAll[4] = {Gf4::zero(), Gf4::one(), Gf4::w(), Gf4::w2()};

// Tr(x y^2) summed over coordinates, straight from the definition.
bool trace_ip_by_definition(const Gf4Vec& x, const Gf4Vec& y) {
  bool t = false;
  for (std::size_t i = 0; i < x.size(); ++i) t ^= trace(x[i] * y[i].square());
  return t;
}

}  // namespace

TEST_CASE("field axioms") {
  for (Gf4 x : kAll) {
    CHECK(x + Gf4::zero() == x);
    CHECK(x * Gf4::one() == x);
    CHECK(x + x == Gf4::zero());
    if (!x.is_zero()) {
      int inverses = 0;
      for (Gf4 y : kAll) inverses += x * y == Gf4::one();
      CHECK(inverses == 1);
    }
    for (Gf4 y : kAll) {
      CHECK(x * y == y * x);
      for (Gf4 z : kAll) {
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
  CHECK(Gf4::w() * Gf4::w() == Gf4::w() + Gf4::one());
  CHECK(Gf4::w() * Gf4::w() == Gf4::w2());
  CHECK(Gf4::w2() * Gf4::w() == Gf4::one());
}

TEST_CASE("trace") {
  CHECK_FALSE(trace(Gf4::zero()));
  CHECK_FALSE(trace(Gf4::one()));
  CHECK(trace(Gf4::w()));
  CHECK(trace(Gf4::w2()));
}

TEST_CASE("symbols round trip") {
  const auto v = Gf4Vec::from_string("w10100100101");
  CHECK(v.size() == 12);
  CHECK(v.to_string() == "w10100100101");
  CHECK(v.weight() == 6);
  CHECK(v[0] == Gf4::w());
  CHECK(Gf4Vec::from_string("01wW").to_string() == "01wW");
  CHECK_THROWS_AS(Gf4Vec::from_string("01x"), ParseError);
  CHECK(Gf4Vec::from_packed(4, v.packed()).size() == 4);
  const auto u = Gf4Vec::from_string("0wW1W");
  CHECK(Gf4Vec::from_packed(5, u.packed()) == u);
}

TEST_CASE("trace inner product is symmetric and matches the definition on all of GF(4)^3") {
  for (std::uint64_t x = 0; x < 64; ++x) {
    for (std::uint64_t y = 0; y < 64; ++y) {
      const auto u = Gf4Vec::from_packed(3, x), v = Gf4Vec::from_packed(3, y);
      CHECK(trace_ip(u, v) == trace_ip(v, u));
      CHECK(trace_ip(u, v) == trace_ip_by_definition(u, v));
    }
  }
}

TEST_CASE("trace inner product is biadditive and alternating on random length-11 words") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const auto x = Gf4Vec::from_packed(11, rng() & low_mask(22));
    const auto y = Gf4Vec::from_packed(11, rng() & low_mask(22));
    const auto z = Gf4Vec::from_packed(11, rng() & low_mask(22));
    CHECK_FALSE(trace_ip(x, x));
    CHECK(trace_ip(x + y, z) == (trace_ip(x, z) != trace_ip(y, z)));
    CHECK(trace_ip(x, y) == trace_ip_by_definition(x, y));
  }
}

TEST_CASE("trace of x times w") {
  // Each nonzero coordinate contributes Tr(w^2 x_i^3) = 1.
  for (std::uint64_t p = 0; p < 256; ++p) {
    const auto x = Gf4Vec::from_packed(4, p);
    CHECK(trace_ip(x, x.scaled(Gf4::w())) == (x.weight() % 2 == 1));
  }
}

TEST_CASE("star product") {
  const std::vector<Gf4Vec> rows = {Gf4Vec::from_string("1w0"), Gf4Vec::from_string("0W1")};
  const auto x = Gf4Vec::from_string("w00");
  const auto s = star_product(rows, x);
  CHECK(s.size() == 2);
  CHECK(s[0] == trace_ip(rows[0], x));
  CHECK(s[1] == trace_ip(rows[1], x));
}

TEST_CASE("bit vectors") {
  const auto b = BitVec::from_string("1011");
  CHECK(b.weight() == 3);
  CHECK(b.to_string() == "1011");
  CHECK(dot(b, BitVec::from_string("1001")) == false);
  CHECK(dot(b, BitVec::from_string("1000")) == true);
  CHECK((b ^ b).weight() == 0);
}

TEST_CASE("GF(2) basis is canonical") {
  const std::vector<std::uint64_t> a = {0b1100, 0b0110, 0b1010};
  const std::vector<std::uint64_t> b = {0b1010, 0b0110};
  CHECK(Gf2Basis(a) == Gf2Basis(b));
  CHECK(Gf2Basis(a).rank() == 2);
  Gf2Basis basis(a);
  CHECK(basis.contains(0b1100));
  CHECK_FALSE(basis.contains(0b0001));
  const auto coords = basis.coordinates(0b1100);
  REQUIRE(coords.has_value());
  CHECK(basis.combine(*coords) == 0b1100);
  const auto null = gf2_nullspace(std::vector<std::uint64_t>{0b11}, 3);
  CHECK(Gf2Basis(null) == Gf2Basis(std::vector<std::uint64_t>{0b100, 0b011}));
}
