#pragma once

// Fixed data for the dodecacode family: the cyclic generator, the generator
// matrix of the length-11 puncture, its two monomial automorphisms, their
// action on weight-1 words, and a Z_2^10 connecting set of the coset graph.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cosetforge/additive_code.hpp"

namespace cosetforge::dodecacode {

/// Read left to right as coordinates 0..11.
inline constexpr std::string_view kCyclicGenerator = "w10100100101";

inline constexpr std::array<std::string_view, 12> kPuncturedRows = {
    "00000WW0w1w", "00000w0www1", "10000101WW1", "w00000w1www", "010000111WW", "0w000W1Www0",
    "00100ww1101", "00w00w1wWW0", "00010www01w", "000w0W11W0w", "00001WWW10W", "0000ww101ww",
};

/// Monomial matrices as one "column:symbol" entry per row.
inline constexpr std::array<std::string_view, 11> kMonomialA = {
    "5:w", "0:1", "2:W", "7:W", "9:1", "4:w", "10:w", "3:1", "1:W", "8:W", "6:1",
};
inline constexpr std::array<std::string_view, 11> kMonomialB = {
    "0:1", "10:W", "5:W", "7:W", "8:w", "2:w", "9:1", "3:w", "4:W", "6:1", "1:w",
};

/// Action on the 33 weight-1 words numbered 1..33 in the order
/// 10..0, w0..0, W0..0, 010..0, ..., 0..0W.
inline constexpr std::string_view kWeightOneActionA =
    "(1 4 27 29 14 18)(2 5 25 30 15 16)(3 6 26 28 13 17)(7 9 8)(10 22 12 24 11 23)(19 31 20 32 21 33)";
inline constexpr std::string_view kWeightOneActionB =
    "(4 32)(5 33)(6 31)(7 17)(8 18)(9 16)(10 23)(11 24)(12 22)(13,27)(14 25)(15 26)(19 28)(20 29)(21 30)";

/// Connecting set of a Cayley graph on Z_2^10 isomorphic to the coset graph
/// of the length-11 code; integers read as binary tuples.
inline constexpr std::array<std::uint32_t, 33> kCayleyConnectingSet = {
    1,   2,   4,   8,   16,  32,  54,  64,  128, 149, 151, 170, 186, 216, 217, 256, 293,
    310, 329, 338, 466, 512, 597, 605, 658, 681, 745, 841, 951, 952, 956, 966, 998,
};

/// (12, 4^6, 6) cyclic code.
AdditiveCode full_code();
/// (11, 4^6, 5) code given by kPuncturedRows.
AdditiveCode punctured_code();
MonomialMap parse_monomial(const std::array<std::string_view, 11>& rows);
std::vector<MonomialMap> monomial_generators();

}  // namespace cosetforge::dodecacode
