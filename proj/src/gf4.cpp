#include "cosetforge/gf4.hpp"

#include "cosetforge/error.hpp"

namespace cosetforge {

Gf4 Gf4::from_symbol(char c) {
  switch (c) {
    case '0': return zero();
    case '1': return one();
    case 'w': return w();
    case 'W': return w2();
    default: throw ParseError(std::string("invalid GF(4) symbol '") + c + "'");
  }
}

char Gf4::symbol() const {
  static constexpr char kSymbols[] = {'0', '1', 'w', 'W'};
  return kSymbols[code_];
}

BitVec::BitVec(std::size_t length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length > kMaxBinaryLength) throw InvalidArgument("binary vector longer than 64");
  if ((bits & ~low_mask(length)) != 0) throw InvalidArgument("bits set beyond vector length");
}

BitVec BitVec::from_string(std::string_view text) {
  BitVec v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i, true);
    } else if (text[i] != '0') {
      throw ParseError(std::string("invalid binary symbol '") + text[i] + "'");
    }
  }
  return v;
}

void BitVec::set(std::size_t i, bool value) {
  if (i >= length_) throw IndexOutOfRange("bit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

std::string BitVec::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) s[i] = (*this)[i] ? '1' : '0';
  return s;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.length_ != length_) throw LengthMismatch("xor of binary vectors of different lengths");
  bits_ ^= other.bits_;
  return *this;
}

bool dot(const BitVec& x, const BitVec& y) {
  if (x.size() != y.size()) throw LengthMismatch("inner product of binary vectors of different lengths");
  return std::popcount(x.bits() & y.bits()) & 1;
}

Gf4Vec::Gf4Vec(std::size_t length, std::uint64_t a_bits, std::uint64_t b_bits)
    : length_(length), a_(a_bits), b_(b_bits) {
  if (length > kMaxQuaternaryLength) throw InvalidArgument("quaternary vector longer than 32");
  if (((a_bits | b_bits) & ~low_mask(length)) != 0) {
    throw InvalidArgument("symbols set beyond vector length");
  }
}

Gf4Vec Gf4Vec::from_string(std::string_view text) {
  Gf4Vec v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) v.set(i, Gf4::from_symbol(text[i]));
  return v;
}

Gf4Vec Gf4Vec::from_symbols(std::span<const Gf4> symbols) {
  Gf4Vec v(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) v.set(i, symbols[i]);
  return v;
}

Gf4Vec Gf4Vec::from_packed(std::size_t length, std::uint64_t packed) {
  const std::uint64_t mask = low_mask(length);
  return Gf4Vec(length, packed & mask, (packed >> length) & mask);
}

void Gf4Vec::set(std::size_t i, Gf4 value) {
  if (i >= length_) throw IndexOutOfRange("symbol index out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  a_ = value.a() ? (a_ | bit) : (a_ & ~bit);
  b_ = value.b() ? (b_ | bit) : (b_ & ~bit);
}

std::string Gf4Vec::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) s[i] = (*this)[i].symbol();
  return s;
}

Gf4Vec Gf4Vec::scaled(Gf4 scalar) const {
  // a' = a*c + b*d, b' = a*d + b*c + b*d applied bitwise with constant (c, d)
  const std::uint64_t c = scalar.a() ? ~std::uint64_t{0} : 0;
  const std::uint64_t d = scalar.b() ? ~std::uint64_t{0} : 0;
  const std::uint64_t a = (a_ & c) ^ (b_ & d);
  const std::uint64_t b = (a_ & d) ^ (b_ & c) ^ (b_ & d);
  return Gf4Vec(length_, a, b);
}

Gf4Vec& Gf4Vec::operator+=(const Gf4Vec& other) {
  if (other.length_ != length_) throw LengthMismatch("sum of quaternary vectors of different lengths");
  a_ ^= other.a_;
  b_ ^= other.b_;
  return *this;
}

bool trace_ip(const Gf4Vec& x, const Gf4Vec& y) {
  if (x.size() != y.size()) throw LengthMismatch("trace inner product of vectors of different lengths");
  return (std::popcount(x.a_bits() & y.b_bits()) + std::popcount(x.b_bits() & y.a_bits())) & 1;
}

BitVec star_product(std::span<const Gf4Vec> rows, const Gf4Vec& x) {
  BitVec out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out.set(i, trace_ip(rows[i], x));
  return out;
}

std::size_t hamming_weight(const Gf4Vec& x) { return x.weight(); }

std::size_t hamming_distance(const Gf4Vec& x, const Gf4Vec& y) { return (x + y).weight(); }

}  // namespace cosetforge
