#pragma once

#include <optional>
#include <span>
#include <utility>

#include "hamr/element.hpp"
#include "hamr/kernel.hpp"
#include "hamr/tables.hpp"

// Face arithmetic: same-tree face neighbors, the pyramid-touch decision for
// tetrahedra, and the collapse/extrude pair that carries elements across
// tree boundaries.

namespace hamr {

enum class FaceShape : std::uint8_t { triangle, quadrilateral };

FaceShape face_shape(TreeShape s, const Element& e, int f);

// Element of the two-dimensional tree living on a root face. Triangles
// carry a type (0: {u >= v}, 1: {v >= u}); quadrilaterals do not.
struct FaceElement {
  std::int32_t x = 0;
  std::int32_t y = 0;
  std::int8_t level = 0;
  std::int8_t type = 0;
  bool quad = false;

  friend bool operator==(const FaceElement&, const FaceElement&) = default;
};

struct NeighborResult {
  Element neighbor;
  int dual_face;  // face of the neighbor touching the queried element
};

int num_root_faces(TreeShape s);
FaceShape root_face_shape(TreeShape s, int rf);

// Root face that face f of e lies on, or -1 when the face is interior.
int root_face(TreeShape s, const Element& e, int f);

// Whether the same-level neighbor of a type 0 / type 3 tetrahedron across
// face f is a pyramid. Constant-time valid-face test first, then the
// level-linear corner walk.
bool tet_touches_pyramid(const Element& t, int f);

// Same-level, same-tree face neighbor; empty when (e, f) is on the tree
// boundary.
std::optional<NeighborResult> face_neighbor_same_tree(TreeShape s, const Element& e, int f);

// Collapse an element to the root face its face f lies on.
FaceElement collapse_to_face(TreeShape s, const Element& e, int f);

// Inverse of collapse: the element of this tree whose face lies at t on
// root face rf. Returns the element and that face's number.
std::pair<Element, int> extrude_from_face(TreeShape s, const FaceElement& t, int rf);

// The four (child slot, child face) pairs whose faces tile face f of e.
std::span<const tables::ChildFace> children_at_face(TreeShape s, const Element& e, int f);

}  // namespace hamr
