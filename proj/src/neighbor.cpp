#include "hamr/neighbor.hpp"

#include <cassert>
#include <stdexcept>

namespace hamr {
namespace {

[[noreturn]] void fail(const char* what) { throw std::domain_error(what); }

constexpr std::array<std::array<tables::ChildFace, 4>, 6> hex_children_at_face = {{
    {{{0, 0}, {2, 0}, {4, 0}, {6, 0}}},
    {{{1, 1}, {3, 1}, {5, 1}, {7, 1}}},
    {{{0, 2}, {1, 2}, {4, 2}, {5, 2}}},
    {{{2, 3}, {3, 3}, {6, 3}, {7, 3}}},
    {{{0, 4}, {1, 4}, {2, 4}, {3, 4}}},
    {{{4, 5}, {5, 5}, {6, 5}, {7, 5}}},
}};

void check_face(TreeShape s, const Element& e, int f) {
  if (f < 0 || f >= num_faces(s, e)) fail("face id out of range");
}

// 2D parametrization (u, v) of each root face, applied to anchors.
void face_param(TreeShape s, int rf, std::int32_t x, std::int32_t y, std::int32_t z,
                std::int32_t& u, std::int32_t& v) {
  switch (s) {
    case TreeShape::hex:
      if (rf < 2) {
        u = y;
        v = z;
      } else if (rf < 4) {
        u = x;
        v = z;
      } else {
        u = x;
        v = y;
      }
      return;
    case TreeShape::tet:
      switch (rf) {
        case 0: u = z; v = y; return;
        case 1:
        case 2: u = x; v = y; return;
        case 3: u = x; v = z; return;
      }
      break;
    case TreeShape::pyramid:
      switch (rf) {
        case 0:
        case 1: u = y; v = z; return;
        case 2:
        case 3: u = x; v = z; return;
        case 4: u = x; v = y; return;
      }
      break;
  }
  fail("root face id out of range");
}

}  // namespace

FaceShape face_shape(TreeShape s, const Element& e, int f) {
  check_face(s, e, f);
  if (s == TreeShape::hex) return FaceShape::quadrilateral;
  if (s == TreeShape::pyramid && is_pyramid(e) && f == 4) return FaceShape::quadrilateral;
  return FaceShape::triangle;
}

int num_root_faces(TreeShape s) {
  switch (s) {
    case TreeShape::hex: return 6;
    case TreeShape::tet: return 4;
    case TreeShape::pyramid: return 5;
  }
  return 0;
}

FaceShape root_face_shape(TreeShape s, int rf) {
  if (rf < 0 || rf >= num_root_faces(s)) fail("root face id out of range");
  if (s == TreeShape::hex) return FaceShape::quadrilateral;
  if (s == TreeShape::pyramid && rf == 4) return FaceShape::quadrilateral;
  return FaceShape::triangle;
}

int root_face(TreeShape s, const Element& e, int f) {
  check_face(s, e, f);
  const std::int32_t h = elem_len(e.level);
  switch (s) {
    case TreeShape::hex: {
      switch (f) {
        case 0: return e.x == 0 ? 0 : -1;
        case 1: return e.x + h == root_len ? 1 : -1;
        case 2: return e.y == 0 ? 2 : -1;
        case 3: return e.y + h == root_len ? 3 : -1;
        case 4: return e.z == 0 ? 4 : -1;
        case 5: return e.z + h == root_len ? 5 : -1;
      }
      return -1;
    }
    case TreeShape::tet: {
      const int rf = tables::tet_root_face[e.type][f];
      if (rf < 0) return -1;
      switch (rf) {
        case 0: return e.x + h == root_len ? 0 : -1;
        case 1: return e.z == e.x ? 1 : -1;
        case 2: return e.z == e.y ? 2 : -1;
        case 3: return e.y == 0 ? 3 : -1;
      }
      return -1;
    }
    case TreeShape::pyramid: {
      const int rf = tables::pyr_root_face[e.type][f];
      if (rf < 0) return -1;
      switch (rf) {
        case 0: return e.x == e.z ? 0 : -1;
        case 1: return e.x + h == root_len ? 1 : -1;
        case 2: return e.y == e.z ? 2 : -1;
        case 3: return e.y + h == root_len ? 3 : -1;
        case 4: return e.z == 0 ? 4 : -1;
      }
      return -1;
    }
  }
  return -1;
}

bool tet_touches_pyramid(const Element& t, int f) {
  if (t.type != 0 && t.type != 3) fail("tet_touches_pyramid: type must be 0 or 3");
  if (t.min_tet_level < 1) fail("tet_touches_pyramid: element is not in a pyramidal tree");
  check_face(TreeShape::pyramid, t, f);

  // Valid-face test on the lowest-level tetrahedral ancestor (constant time
  // when t is that ancestor itself).
  const Element a = ancestor_at_level(TreeShape::pyramid, t, t.min_tet_level);
  const Element ap = parent(TreeShape::pyramid, a);
  const int slot = local_index(TreeShape::pyramid, a);
  if (tables::pyr_tet_nonvalid_face[ap.type - 6][slot] == f) return false;
  // Every ancestor down to a must sit in the corner of its parent touching
  // face f; corner children keep their parent's type and face numbering.
  int typ = t.type;
  for (int lev = t.level; lev > a.level; --lev) {
    const int cid = cube_id_at(t.x, t.y, t.z, lev);
    const int bey = tables::tet_bey_id[typ][cid];
    if (bey > 3 || bey == f) return false;
    typ = tables::tet_parent_type[typ][cid];
  }
  return true;
}

std::optional<NeighborResult> face_neighbor_same_tree(TreeShape s, const Element& e, int f) {
  check_face(s, e, f);
  if (root_face(s, e, f) >= 0) return std::nullopt;
  const std::int32_t h = elem_len(e.level);
  Element n;
  n.level = e.level;
  if (s == TreeShape::hex) {
    n = e;
    const int axis = f >> 1;
    const std::int32_t d = (f & 1) ? h : -h;
    if (axis == 0) n.x += d;
    if (axis == 1) n.y += d;
    if (axis == 2) n.z += d;
    return NeighborResult{n, f ^ 1};
  }
  tables::NeighborRule rule{};
  if (s == TreeShape::tet) {
    rule = tables::tet_neigh[e.type][f];
    n.min_tet_level = 0;
  } else if (is_pyramid(e)) {
    rule = tables::pyr_neigh[e.type - 6][f];
  } else if ((e.type == 0 || e.type == 3) && tet_touches_pyramid(e, f)) {
    rule = tables::tet_pyr_neigh[e.type == 0 ? 0 : 1][f];
  } else {
    rule = tables::tet_neigh[e.type][f];
  }
  n.x = e.x + rule.dx * h;
  n.y = e.y + rule.dy * h;
  n.z = e.z + rule.dz * h;
  n.type = rule.type;
  if (s == TreeShape::pyramid)
    n.min_tet_level =
        static_cast<std::int8_t>(resolve_min_tet_level(n.x, n.y, n.z, n.level, n.type));
  return NeighborResult{n, rule.dual};
}

FaceElement collapse_to_face(TreeShape s, const Element& e, int f) {
  const int rf = root_face(s, e, f);
  if (rf < 0) fail("collapse_to_face: face is not on the root boundary");
  FaceElement t;
  face_param(s, rf, e.x, e.y, e.z, t.x, t.y);
  t.level = e.level;
  t.quad = root_face_shape(s, rf) == FaceShape::quadrilateral;
  if (!t.quad) {
    if (s == TreeShape::pyramid)
      t.type = is_pyramid(e) ? 0 : static_cast<std::int8_t>(tables::boundary_tri_type(e.type));
    else
      t.type = e.type == 0 ? 0 : 1;
  }
  return t;
}

std::pair<Element, int> extrude_from_face(TreeShape s, const FaceElement& t, int rf) {
  if (rf < 0 || rf >= num_root_faces(s)) fail("extrude_from_face: bad root face");
  if (t.quad != (root_face_shape(s, rf) == FaceShape::quadrilateral))
    fail("extrude_from_face: face element shape does not match the root face");
  const std::int32_t h = elem_len(t.level);
  const std::int32_t top = root_len - h;
  Element e;
  e.level = t.level;
  switch (s) {
    case TreeShape::hex: {
      const std::int32_t w = (rf & 1) ? top : 0;
      switch (rf >> 1) {
        case 0: e.x = w; e.y = t.x; e.z = t.y; break;
        case 1: e.x = t.x; e.y = w; e.z = t.y; break;
        case 2: e.x = t.x; e.y = t.y; e.z = w; break;
      }
      return {e, rf};
    }
    case TreeShape::tet: {
      switch (rf) {
        case 0: e.x = top; e.y = t.y; e.z = t.x; break;
        case 1: e.x = t.x; e.y = t.y; e.z = t.x; break;
        case 2: e.x = t.x; e.y = t.y; e.z = t.y; break;
        case 3: e.x = t.x; e.y = 0; e.z = t.y; break;
      }
      const auto rule =
          (t.type == 0 ? tables::tet_extrude_tri0 : tables::tet_extrude_tri1)[rf];
      e.type = rule.type;
      e.min_tet_level = 0;
      return {e, rule.face};
    }
    case TreeShape::pyramid: {
      if (rf == 4) {
        e.x = t.x;
        e.y = t.y;
        e.z = 0;
        e.type = 6;
        e.min_tet_level = -1;
        return {e, 4};
      }
      switch (rf) {
        case 0: e.x = t.y; e.y = t.x; e.z = t.y; break;
        case 1: e.x = top; e.y = t.x; e.z = t.y; break;
        case 2: e.x = t.x; e.y = t.y; e.z = t.y; break;
        case 3: e.x = t.x; e.y = top; e.z = t.y; break;
      }
      if (t.type == 0 && t.y == (t.x & t.y)) {
        // every ancestor triangle sits in a corner: the element is a pyramid
        e.type = 6;
        e.min_tet_level = -1;
        return {e, rf};
      }
      const auto rule =
          (t.type == 0 ? tables::pyr_extrude_tri0 : tables::pyr_extrude_tri1)[rf];
      e.type = rule.type;
      e.min_tet_level =
          static_cast<std::int8_t>(resolve_min_tet_level(e.x, e.y, e.z, e.level, e.type));
      return {e, rule.face};
    }
  }
  fail("extrude_from_face: bad shape");
}

std::span<const tables::ChildFace> children_at_face(TreeShape s, const Element& e, int f) {
  check_face(s, e, f);
  switch (s) {
    case TreeShape::hex: return hex_children_at_face[f];
    case TreeShape::tet: return tables::tet_children_at_face[e.type][f];
    case TreeShape::pyramid:
      if (is_pyramid(e)) return tables::pyr_children_at_face[e.type - 6][f];
      return tables::tet_children_at_face[e.type][f];
  }
  fail("children_at_face: bad shape");
}

}  // namespace hamr
