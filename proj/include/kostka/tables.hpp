#pragma once

#include <array>
#include <cstdint>

namespace kostka {

// Published counts of extremal rays and Hilbert basis elements for r = 1..17.
inline constexpr std::array<std::int64_t, 17> kPublishedRayCounts{
    1, 3, 7, 14, 25, 41, 63, 92, 129, 175, 231, 298, 377, 469, 575, 696, 833};
inline constexpr std::array<std::int64_t, 17> kPublishedBasisCounts{
    1,     3,     8,     19,    50,     111,    281,    635,   1443,
    3093,  6876,  14133, 29788, 59935,  118893, 232972, 457982};

}  // namespace kostka
