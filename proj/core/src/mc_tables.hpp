#ifndef PROXFIELD_MC_TABLES_HPP_
#define PROXFIELD_MC_TABLES_HPP_

#include <array>
#include <cstdint>

namespace proxfield::detail {

// Standard 256-case marching-cubes tables. Corner numbering: bit i is corner
// i with corners 0-3 on the lower z face counterclockwise from (0,0,0) and
// 4-7 stacked above them; edge k connects the usual corner pairs (0-1, 1-2,
// 2-3, 3-0, 4-5, 5-6, 6-7, 7-4, 0-4, 1-5, 2-6, 3-7).
extern const std::array<std::uint16_t, 256> kEdgeTable;
extern const std::array<std::array<std::int8_t, 16>, 256> kTriTable;

}  // namespace proxfield::detail

#endif  // PROXFIELD_MC_TABLES_HPP_
