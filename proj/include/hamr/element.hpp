#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace hamr {

// Maximum refinement depth. 6 bits of SFC key per level keeps the full
// index inside 126 bits.
inline constexpr int max_level = 21;
inline constexpr std::int32_t root_len = std::int32_t{1} << max_level;

using uint128 = unsigned __int128;

enum class TreeShape : std::uint8_t { hex = 0, tet = 1, pyramid = 2 };

constexpr std::string_view shape_name(TreeShape s) {
  switch (s) {
    case TreeShape::hex: return "hex";
    case TreeShape::tet: return "tet";
    case TreeShape::pyramid: return "pyramid";
  }
  return "?";
}

// Element of a refinement tree, identified by the anchor (lower corner of
// its enclosing sub-cube), refinement level and type.
//
// type 0..5 are the Kuhn tetrahedra of the sub-cube, 6 and 7 the two
// pyramid orientations. Hexahedral trees keep type 0.
//
// min_tet_level is the level of the lowest-level tetrahedral ancestor:
// -1 for pyramids and hexahedra, 0 for elements of a tetrahedral tree,
// and in [1, level] for tetrahedra inside a pyramidal tree.
struct Element {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int32_t z = 0;
  std::int8_t level = 0;
  std::int8_t type = 0;
  std::int8_t min_tet_level = -1;

  friend bool operator==(const Element&, const Element&) = default;
};

constexpr bool is_pyramid(const Element& e) { return e.type >= 6; }
constexpr std::int32_t elem_len(int level) { return root_len >> level; }

// Length of an element as a fraction of the root cube, for geometry code.
constexpr double elem_len_unit(int level) {
  return static_cast<double>(elem_len(level)) / root_len;
}

constexpr Element root_element(TreeShape s) {
  switch (s) {
    case TreeShape::hex: return {0, 0, 0, 0, 0, -1};
    case TreeShape::tet: return {0, 0, 0, 0, 0, 0};
    case TreeShape::pyramid: return {0, 0, 0, 0, 6, -1};
  }
  return {};
}

// 3-bit sub-cube position at level j within the level j-1 cube.
// bit 0 = x, bit 1 = y, bit 2 = z.
constexpr int cube_id_at(std::int32_t x, std::int32_t y, std::int32_t z, int j) {
  const int b = max_level - j;
  return ((x >> b) & 1) | (((y >> b) & 1) << 1) | (((z >> b) & 1) << 2);
}

struct Ordering {
  int v;  // <0, 0, >0
  constexpr bool less() const { return v < 0; }
  constexpr bool equal() const { return v == 0; }
  constexpr bool greater() const { return v > 0; }
};

}  // namespace hamr
