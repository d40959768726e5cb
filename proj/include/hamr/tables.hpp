#pragma once

#include <array>
#include <cstdint>

// Connectivity tables for the element kernels.
//
// Tetrahedral tables follow the published six-type scheme: the unit cube is
// split into the six Kuhn simplices sharing the diagonal (0,0,0)-(1,1,1),
//   type 0: x>=z>=y   type 1: x>=y>=z   type 2: y>=x>=z
//   type 3: y>=z>=x   type 4: z>=y>=x   type 5: z>=x>=y
// refined with Bey's red rule. Pyramid type 6 is {z<=x, z<=y} (square base
// at the bottom of its cube, apex at the far corner), type 7 its 180-degree
// rotation {z>=x, z>=y} whose apex sits at the anchor.
//
// All tables are frozen from a geometric derivation; the test suite
// re-derives them from vertex coordinates and asserts equality
// (tests/test_tables.cpp).

namespace hamr::tables {

struct ChildSlot {
  std::int8_t cid;   // sub-cube of the child, bit0=x bit1=y bit2=z
  std::int8_t type;  // type of the child
};

// Children in SFC order (ascending (cid, type)).
inline constexpr std::array<std::array<ChildSlot, 10>, 2> pyr_child = {{
    // parent type 6
    {{{0, 6}, {1, 3}, {1, 6}, {2, 0}, {2, 6}, {3, 0}, {3, 3}, {3, 6}, {3, 7}, {7, 6}}},
    // parent type 7
    {{{0, 7}, {4, 0}, {4, 3}, {4, 6}, {4, 7}, {5, 3}, {5, 7}, {6, 0}, {6, 7}, {7, 7}}},
}};

inline constexpr std::array<std::array<ChildSlot, 8>, 6> tet_child = {{
    {{{0, 0}, {1, 0}, {1, 4}, {1, 5}, {5, 0}, {5, 1}, {5, 2}, {7, 0}}},
    {{{0, 1}, {1, 1}, {1, 2}, {1, 3}, {3, 0}, {3, 1}, {3, 5}, {7, 1}}},
    {{{0, 2}, {2, 0}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {3, 4}, {7, 2}}},
    {{{0, 3}, {2, 3}, {2, 4}, {2, 5}, {6, 1}, {6, 2}, {6, 3}, {7, 3}}},
    {{{0, 4}, {4, 2}, {4, 3}, {4, 4}, {6, 0}, {6, 4}, {6, 5}, {7, 4}}},
    {{{0, 5}, {4, 0}, {4, 1}, {4, 5}, {5, 3}, {5, 4}, {5, 5}, {7, 5}}},
}};

// Parent type from (child type, child cube id); -1 marks combinations that
// cannot occur in a valid tree.
inline constexpr std::array<std::array<std::int8_t, 8>, 6> tet_parent_type = {{
    {0, 0, 2, 1, 5, 0, 4, 0},
    {1, 1, 2, 1, 5, 0, 3, 1},
    {2, 1, 2, 2, 4, 0, 3, 2},
    {3, 1, 3, 2, 4, 5, 3, 3},
    {4, 0, 3, 2, 4, 5, 4, 4},
    {5, 0, 3, 1, 5, 5, 4, 5},
}};

// Rows: pyramid child type 6, 7.
inline constexpr std::array<std::array<std::int8_t, 8>, 2> pyr_parent_type = {{
    {6, 6, 6, 6, 7, -1, -1, 6},
    {7, -1, -1, 6, 7, 7, 7, 7},
}};

// Bey child id of a tetrahedron with (type, cid) inside its parent.
// Ids 0..3 are the corner children (corner i of the parent), 4..7 interior.
inline constexpr std::array<std::array<std::int8_t, 8>, 6> tet_bey_id = {{
    {0, 1, 4, 7, 5, 2, 6, 3},
    {0, 1, 5, 2, 4, 7, 6, 3},
    {0, 5, 1, 2, 4, 6, 7, 3},
    {0, 4, 1, 7, 5, 6, 2, 3},
    {0, 4, 5, 6, 1, 7, 2, 3},
    {0, 5, 4, 6, 1, 2, 7, 3},
}};

struct NeighborRule {
  std::int8_t dx, dy, dz;  // anchor shift in element lengths
  std::int8_t type;        // type of the neighbor
  std::int8_t dual;        // face of the neighbor touching the element
};

// Same-level face neighbor of a tetrahedron inside a pure tetrahedral
// tiling, per (type, face).
inline constexpr std::array<std::array<NeighborRule, 4>, 6> tet_neigh = {{
    {{{1, 0, 0, 4, 3}, {0, 0, 0, 5, 1}, {0, 0, 0, 1, 2}, {0, -1, 0, 2, 0}}},
    {{{1, 0, 0, 3, 3}, {0, 0, 0, 2, 1}, {0, 0, 0, 0, 2}, {0, 0, -1, 5, 0}}},
    {{{0, 1, 0, 0, 3}, {0, 0, 0, 1, 1}, {0, 0, 0, 3, 2}, {0, 0, -1, 4, 0}}},
    {{{0, 1, 0, 5, 3}, {0, 0, 0, 4, 1}, {0, 0, 0, 2, 2}, {-1, 0, 0, 1, 0}}},
    {{{0, 0, 1, 2, 3}, {0, 0, 0, 3, 1}, {0, 0, 0, 5, 2}, {-1, 0, 0, 0, 0}}},
    {{{0, 0, 1, 1, 3}, {0, 0, 0, 0, 1}, {0, 0, 0, 4, 2}, {0, -1, 0, 3, 0}}},
}};

// Pyramid neighbor of a type 0 / type 3 tetrahedron whose face touches a
// pyramid (rows: type 0, type 3).
inline constexpr std::array<std::array<NeighborRule, 4>, 2> tet_pyr_neigh = {{
    {{{1, 0, 0, 7, 3}, {0, 0, 0, 7, 2}, {0, 0, 0, 6, 2}, {0, -1, 0, 6, 3}}},
    {{{0, 1, 0, 7, 1}, {0, 0, 0, 7, 0}, {0, 0, 0, 6, 0}, {-1, 0, 0, 6, 1}}},
}};

// Same-level face neighbor of a pyramid (rows: type 6, type 7). Faces 0..3
// connect to tetrahedra, face 4 to the opposite pyramid type.
inline constexpr std::array<std::array<NeighborRule, 5>, 2> pyr_neigh = {{
    {{{0, 0, 0, 3, 2}, {1, 0, 0, 3, 3}, {0, 0, 0, 0, 2}, {0, 1, 0, 0, 3}, {0, 0, -1, 7, 4}}},
    {{{0, 0, 0, 3, 1}, {0, -1, 0, 3, 0}, {0, 0, 0, 0, 1}, {-1, 0, 0, 0, 0}, {0, 0, 1, 6, 4}}},
}};

// The single face of a tetrahedral pyramid child that does not connect to a
// pyramid (indexed by [parent type - 6][child slot]; -1 for pyramid slots).
inline constexpr std::array<std::array<std::int8_t, 10>, 2> pyr_tet_nonvalid_face = {{
    {-1, 1, -1, 1, -1, 0, 0, -1, -1, -1},
    {-1, 3, 3, -1, -1, 2, -1, 2, -1, -1},
}};

struct ChildFace {
  std::int8_t slot;  // child slot (SFC index)
  std::int8_t face;  // face of the child lying on the parent face
};

// The four children whose own face tiles a given parent face.
inline constexpr std::array<std::array<std::array<ChildFace, 4>, 4>, 6> tet_children_at_face = {{
    {{{{{1, 0}, {4, 0}, {5, 0}, {7, 0}}}, {{{0, 1}, {4, 1}, {6, 2}, {7, 1}}},
      {{{0, 2}, {1, 2}, {2, 1}, {7, 2}}}, {{{0, 3}, {1, 3}, {3, 3}, {4, 3}}}}},
    {{{{{1, 0}, {4, 0}, {5, 0}, {7, 0}}}, {{{0, 1}, {5, 1}, {6, 2}, {7, 1}}},
      {{{0, 2}, {1, 2}, {3, 1}, {7, 2}}}, {{{0, 3}, {1, 3}, {2, 3}, {5, 3}}}}},
    {{{{{3, 0}, {4, 0}, {5, 0}, {7, 0}}}, {{{0, 1}, {4, 1}, {6, 2}, {7, 1}}},
      {{{0, 2}, {1, 1}, {3, 2}, {7, 2}}}, {{{0, 3}, {2, 3}, {3, 3}, {4, 3}}}}},
    {{{{{1, 0}, {5, 0}, {6, 0}, {7, 0}}}, {{{0, 1}, {4, 2}, {6, 1}, {7, 1}}},
      {{{0, 2}, {1, 2}, {3, 1}, {7, 2}}}, {{{0, 3}, {1, 3}, {2, 3}, {6, 3}}}}},
    {{{{{3, 0}, {5, 0}, {6, 0}, {7, 0}}}, {{{0, 1}, {4, 2}, {5, 1}, {7, 1}}},
      {{{0, 2}, {1, 1}, {3, 2}, {7, 2}}}, {{{0, 3}, {2, 3}, {3, 3}, {5, 3}}}}},
    {{{{{3, 0}, {5, 0}, {6, 0}, {7, 0}}}, {{{0, 1}, {4, 2}, {6, 1}, {7, 1}}},
      {{{0, 2}, {2, 1}, {3, 2}, {7, 2}}}, {{{0, 3}, {1, 3}, {3, 3}, {6, 3}}}}},
}};

inline constexpr std::array<std::array<std::array<ChildFace, 4>, 5>, 2> pyr_children_at_face = {{
    {{{{{0, 0}, {3, 1}, {4, 0}, {9, 0}}}, {{{2, 1}, {5, 0}, {7, 1}, {9, 1}}},
      {{{0, 2}, {1, 1}, {2, 2}, {9, 2}}}, {{{4, 3}, {6, 0}, {7, 3}, {9, 3}}},
      {{{0, 4}, {2, 4}, {4, 4}, {7, 4}}}}},
    {{{{{0, 0}, {7, 2}, {8, 0}, {9, 0}}}, {{{0, 1}, {1, 3}, {4, 1}, {6, 1}}},
      {{{0, 2}, {5, 2}, {6, 2}, {9, 2}}}, {{{0, 3}, {2, 3}, {4, 3}, {8, 3}}},
      {{{4, 4}, {6, 4}, {8, 4}, {9, 4}}}}},
}};

struct Corner {
  std::int8_t x, y, z;  // in element-length units
};

// Corner coordinates; tets have 4, pyramids 5 (faces of a pyramid:
// f0={C0,C3,C4} f1={C1,C2,C4} f2={C0,C1,C4} f3={C2,C3,C4} f4={C0,C1,C2,C3};
// tet face i is opposite corner i).
inline constexpr std::array<std::array<Corner, 4>, 6> tet_corners = {{
    {{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {1, 1, 1}}},
    {{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}}},
    {{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}}},
    {{{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}}},
    {{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}},
    {{{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}}},
}};

inline constexpr std::array<std::array<Corner, 5>, 2> pyr_corners = {{
    {{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {1, 1, 1}}},
    {{{1, 1, 1}, {1, 0, 1}, {0, 0, 1}, {0, 1, 1}, {0, 0, 0}}},
}};

// Face -> corner ids (quad base last); -1 pads triangles.
inline constexpr std::array<std::array<std::int8_t, 4>, 5> pyr_faces = {{
    {0, 3, 4, -1}, {1, 2, 4, -1}, {0, 1, 4, -1}, {2, 3, 4, -1}, {0, 1, 2, 3}}};

// Boundary classification for elements of a pyramidal tree whose face lies
// on a root face: (type, face) -> root face, or -1. The root faces of the
// type-6 root pyramid are
//   F0: z = x   F1: x = root_len   F2: z = y   F3: y = root_len   F4: z = 0.
inline constexpr std::array<std::array<std::int8_t, 5>, 8> pyr_root_face = {{
    {1, 0, -1, -1, -1},    // type 0: f0 on F1, f1 on F0
    {1, -1, 2, -1, -1},    // type 1: f0 on F1, f2 on F2
    {3, -1, 0, -1, -1},    // type 2: f0 on F3, f2 on F0
    {3, 2, -1, -1, -1},    // type 3: f0 on F3, f1 on F2
    {-1, -1, -1, -1, -1},  // type 4
    {-1, -1, -1, -1, -1},  // type 5
    {0, 1, 2, 3, 4},       // type 6
    {-1, -1, -1, -1, -1},  // type 7 never touches the root boundary
}};

// Triangle type of the collapsed face: 1 for tets of type 0 or 3, else 0.
constexpr int boundary_tri_type(int elem_type) {
  return (elem_type == 0 || elem_type == 3) ? 1 : 0;
}

struct ExtrudeRule {
  std::int8_t type;  // element type produced
  std::int8_t face;  // its face lying on the root face
};

// Extrusion on the pyramidal root: per root face F0..F3, the tetrahedron
// produced from a triangle of type 0 (when the corner criterion fails) and
// of type 1.
inline constexpr std::array<ExtrudeRule, 4> pyr_extrude_tri0 = {{{2, 2}, {1, 0}, {1, 2}, {2, 0}}};
inline constexpr std::array<ExtrudeRule, 4> pyr_extrude_tri1 = {{{0, 1}, {0, 0}, {3, 1}, {3, 0}}};

// Boundary classification for a pure tetrahedral tree rooted in the type-0
// tetrahedron. Root faces: F0: x = root_len, F1: z = x, F2: z = y, F3: y = 0.
inline constexpr std::array<std::array<std::int8_t, 4>, 6> tet_root_face = {{
    {0, 1, 2, 3},          // type 0 (the corner-chain type)
    {0, -1, -1, -1},       // type 1: f0 on F0
    {-1, -1, 1, -1},       // type 2: f2 on F1
    {-1, -1, -1, -1},      // type 3
    {-1, 2, -1, -1},       // type 4: f1 on F2
    {-1, -1, -1, 3},       // type 5: f3 on F3
}};

inline constexpr std::array<ExtrudeRule, 4> tet_extrude_tri0 = {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}};
inline constexpr std::array<ExtrudeRule, 4> tet_extrude_tri1 = {{{1, 0}, {2, 2}, {4, 1}, {5, 3}}};

}  // namespace hamr::tables
