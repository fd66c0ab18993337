#include "cosetforge/dodecacode.hpp"

#include <charconv>
#include <string>

#include "cosetforge/error.hpp"

namespace cosetforge::dodecacode {

AdditiveCode full_code() { return cyclic_additive_code(Gf4Vec::from_string(kCyclicGenerator)); }

AdditiveCode punctured_code() {
  std::vector<Gf4Vec> rows;
  for (auto r : kPuncturedRows) rows.push_back(Gf4Vec::from_string(r));
  return AdditiveCode::from_generators(11, rows);
}

MonomialMap parse_monomial(const std::array<std::string_view, 11>& rows) {
  std::vector<std::size_t> source;
  std::vector<Gf4> scale;
  for (auto entry : rows) {
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos || colon + 2 != entry.size()) {
      throw ParseError("malformed monomial entry '" + std::string(entry) + "'");
    }
    std::size_t column = 0;
    const auto [ptr, ec] = std::from_chars(entry.data(), entry.data() + colon, column);
    if (ec != std::errc{} || ptr != entry.data() + colon) {
      throw ParseError("malformed monomial column '" + std::string(entry) + "'");
    }
    source.push_back(column);
    scale.push_back(Gf4::from_symbol(entry.back()));
  }
  return MonomialMap(std::move(source), std::move(scale));
}

std::vector<MonomialMap> monomial_generators() { return {parse_monomial(kMonomialA), parse_monomial(kMonomialB)}; }

}  // namespace cosetforge::dodecacode
