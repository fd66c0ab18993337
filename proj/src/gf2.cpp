#include "cosetforge/gf2.hpp"

#include <algorithm>
#include <bit>

#include "cosetforge/error.hpp"

namespace cosetforge {

namespace {

unsigned pivot_of(std::uint64_t v) { return 63u - static_cast<unsigned>(std::countl_zero(v)); }

}  // namespace

Gf2Basis::Gf2Basis(std::span<const std::uint64_t> vectors) {
  for (auto v : vectors) insert(v);
}

std::uint64_t Gf2Basis::reduce(std::uint64_t v) const {
  for (auto row : rows_) {
    if ((v >> pivot_of(row)) & 1) v ^= row;
  }
  return v;
}

bool Gf2Basis::insert(std::uint64_t v) {
  v = reduce(v);
  if (v == 0) return false;
  const unsigned p = pivot_of(v);
  for (auto& row : rows_) {
    if ((row >> p) & 1) row ^= v;
  }
  auto pos = std::find_if(rows_.begin(), rows_.end(), [p](std::uint64_t r) { return pivot_of(r) < p; });
  rows_.insert(pos, v);
  return true;
}

std::optional<std::uint64_t> Gf2Basis::coordinates(std::uint64_t v) const {
  std::uint64_t coords = 0;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((v >> pivot_of(rows_[i])) & 1) {
      coords |= std::uint64_t{1} << i;
      acc ^= rows_[i];
    }
  }
  if (acc != v) return std::nullopt;
  return coords;
}

std::uint64_t Gf2Basis::combine(std::uint64_t coords) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((coords >> i) & 1) acc ^= rows_[i];
  }
  return acc;
}

std::vector<unsigned> Gf2Basis::pivots() const {
  std::vector<unsigned> out;
  out.reserve(rows_.size());
  for (auto r : rows_) out.push_back(pivot_of(r));
  return out;
}

std::vector<std::uint64_t> gf2_nullspace(std::span<const std::uint64_t> rows, std::size_t width) {
  if (width > 64) throw InvalidArgument("nullspace width above 64");
  Gf2Basis basis(rows);
  std::vector<bool> is_pivot(width, false);
  for (auto p : basis.pivots()) {
    if (p >= width) throw InvalidArgument("constraint row wider than declared width");
    is_pivot[p] = true;
  }
  // Each free column f gives one solution: set f, then fix every pivot
  // coordinate so that its row's parity vanishes.
  std::vector<std::uint64_t> out;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (auto row : basis.rows()) {
      if ((row >> f) & 1) v |= std::uint64_t{1} << pivot_of(row);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace cosetforge
