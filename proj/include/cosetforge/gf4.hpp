#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cosetforge {

/// Longest quaternary vector; two parts of 32 bits pack into one 64-bit word.
inline constexpr std::size_t kMaxQuaternaryLength = 32;
inline constexpr std::size_t kMaxBinaryLength = 64;

inline constexpr std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

/// Element a + b*w of GF(4) with w^2 = w + 1. Text symbols: 0, 1, w, W (= w^2).
class Gf4 {
 public:
  constexpr Gf4() = default;
  constexpr Gf4(bool a, bool b) : code_(static_cast<std::uint8_t>(a | (b << 1))) {}

  static constexpr Gf4 zero() { return {false, false}; }
  static constexpr Gf4 one() { return {true, false}; }
  static constexpr Gf4 w() { return {false, true}; }
  static constexpr Gf4 w2() { return {true, true}; }
  static constexpr Gf4 from_code(unsigned code) { return {(code & 1) != 0, (code & 2) != 0}; }
  /// Throws ParseError for anything outside {0,1,w,W}.
  static Gf4 from_symbol(char c);

  constexpr bool a() const { return code_ & 1; }
  constexpr bool b() const { return (code_ >> 1) & 1; }
  constexpr unsigned code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }
  char symbol() const;

  constexpr Gf4 square() const { return {a() != b(), b()}; }

  friend constexpr Gf4 operator+(Gf4 x, Gf4 y) { return from_code(x.code_ ^ y.code_); }
  friend constexpr Gf4 operator*(Gf4 x, Gf4 y) {
    // (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w
    const bool a = x.a(), b = x.b(), c = y.a(), d = y.b();
    return {static_cast<bool>((a & c) ^ (b & d)), static_cast<bool>((a & d) ^ (b & c) ^ (b & d))};
  }
  friend constexpr bool operator==(Gf4, Gf4) = default;

 private:
  std::uint8_t code_ = 0;
};

constexpr Gf4 gf4_mul(Gf4 x, Gf4 y) { return x * y; }

/// Tr(z) = z + z^2, which is the w-coefficient of z.
constexpr bool trace(Gf4 z) {
  const Gf4 t = z + z.square();
  return t.a();
}

/// Packed binary vector of length at most 64.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t length, std::uint64_t bits = 0);
  /// Parses a string over {0,1}; position 0 is the first character.
  static BitVec from_string(std::string_view text);

  std::size_t size() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](std::size_t i) const { return (bits_ >> i) & 1; }
  void set(std::size_t i, bool value);
  std::size_t weight() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::string to_string() const;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec x, const BitVec& y) { return x ^= y; }
  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec&, const BitVec&) = default;

 private:
  std::size_t length_ = 0;
  std::uint64_t bits_ = 0;
};

/// Binary inner product.
bool dot(const BitVec& x, const BitVec& y);

/// Vector over GF(4) stored as parallel a-part and b-part bit masks.
class Gf4Vec {
 public:
  Gf4Vec() = default;
  explicit Gf4Vec(std::size_t length, std::uint64_t a_bits = 0, std::uint64_t b_bits = 0);
  static Gf4Vec from_string(std::string_view text);
  static Gf4Vec from_symbols(std::span<const Gf4> symbols);
  /// Inverse of packed(): a-part in bits [0,n), b-part in bits [n,2n).
  static Gf4Vec from_packed(std::size_t length, std::uint64_t packed);

  std::size_t size() const { return length_; }
  std::uint64_t a_bits() const { return a_; }
  std::uint64_t b_bits() const { return b_; }
  std::uint64_t support() const { return a_ | b_; }
  std::uint64_t packed() const { return a_ | (b_ << length_); }

  Gf4 operator[](std::size_t i) const { return {((a_ >> i) & 1) != 0, ((b_ >> i) & 1) != 0}; }
  void set(std::size_t i, Gf4 value);
  std::size_t weight() const { return static_cast<std::size_t>(std::popcount(support())); }
  bool is_zero() const { return support() == 0; }
  std::string to_string() const;

  /// Coordinatewise multiplication by a scalar.
  Gf4Vec scaled(Gf4 scalar) const;

  Gf4Vec& operator+=(const Gf4Vec& other);
  friend Gf4Vec operator+(Gf4Vec x, const Gf4Vec& y) { return x += y; }
  friend bool operator==(const Gf4Vec&, const Gf4Vec&) = default;
  friend auto operator<=>(const Gf4Vec&, const Gf4Vec&) = default;

 private:
  std::size_t length_ = 0;
  std::uint64_t a_ = 0;
  std::uint64_t b_ = 0;
};

/// Trace inner product sum_i Tr(x_i * y_i^2), evaluated through the
/// symplectic form parity(|a_x & b_y| + |b_x & a_y|).
bool trace_ip(const Gf4Vec& x, const Gf4Vec& y);

/// Bit i of the result is trace_ip(rows[i], x).
BitVec star_product(std::span<const Gf4Vec> rows, const Gf4Vec& x);

std::size_t hamming_weight(const Gf4Vec& x);
std::size_t hamming_distance(const Gf4Vec& x, const Gf4Vec& y);

}  // namespace cosetforge
