#include "hamr/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hamr/tables.hpp"

namespace hamr {
namespace {

using tables::ChildSlot;

constexpr std::array<ChildSlot, 8> hex_child = {
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}}};

std::span<const ChildSlot> child_slots(TreeShape s, int type) {
  if (s == TreeShape::hex) return hex_child;
  if (type >= 6) return tables::pyr_child[type - 6];
  return tables::tet_child[type];
}

// 8^d and 2*8^d - 6^d, d <= max_level. The pyramid count for d = 21 is
// 2^64 - 6^21 and still fits an unsigned 64-bit value.
struct Pow {
  std::uint64_t p8[max_level + 1];
  std::uint64_t npyr[max_level + 1];
  constexpr Pow() : p8{}, npyr{} {
    uint128 e8 = 1, e6 = 1;
    for (int d = 0; d <= max_level; ++d) {
      p8[d] = static_cast<std::uint64_t>(e8);
      npyr[d] = static_cast<std::uint64_t>(2 * e8 - e6);
      e8 *= 8;
      e6 *= 6;
    }
  }
};
constexpr Pow pow_tab{};

std::uint64_t descendant_count(int elem_type, int depth) {
  return elem_type >= 6 ? pow_tab.npyr[depth] : pow_tab.p8[depth];
}

[[noreturn]] void fail(const char* what) { throw std::domain_error(what); }

// Closed containment of the (k-scaled) local point q in the unit region of
// an element type whose cube has k-scaled length len.
bool region_contains(int type, std::int64_t len, std::int64_t qx, std::int64_t qy,
                     std::int64_t qz) {
  if (qx < 0 || qy < 0 || qz < 0 || qx > len || qy > len || qz > len) return false;
  switch (type) {
    case 0: return qx >= qz && qz >= qy;
    case 1: return qx >= qy && qy >= qz;
    case 2: return qy >= qx && qx >= qz;
    case 3: return qy >= qz && qz >= qx;
    case 4: return qz >= qy && qy >= qx;
    case 5: return qz >= qx && qx >= qy;
    case 6: return qz <= qx && qz <= qy;
    case 7: return qz >= qx && qz >= qy;
  }
  return false;
}

struct CornerSum {
  int k;  // number of corners
  int sx, sy, sz;
};

CornerSum corner_sum(int type) {
  if (type >= 6) {
    const auto& c = tables::pyr_corners[type - 6];
    CornerSum s{5, 0, 0, 0};
    for (const auto& v : c) {
      s.sx += v.x;
      s.sy += v.y;
      s.sz += v.z;
    }
    return s;
  }
  const auto& c = tables::tet_corners[type];
  CornerSum s{4, 0, 0, 0};
  for (const auto& v : c) {
    s.sx += v.x;
    s.sy += v.y;
    s.sz += v.z;
  }
  return s;
}

// Ancestor types of e at levels 1..e.level (types[j] is the level-j type).
// O(level); each parent step is table arithmetic.
void ancestor_types(TreeShape s, const Element& e, std::uint8_t* types) {
  Element cur = e;
  for (int j = e.level; j >= 1; --j) {
    types[j] = static_cast<std::uint8_t>(cur.type);
    cur = parent(s, cur);
  }
}

}  // namespace

int num_children(TreeShape s, const Element& e) {
  return (s == TreeShape::pyramid && is_pyramid(e)) ? 10 : 8;
}

int num_vertices(TreeShape s, const Element& e) {
  if (s == TreeShape::hex) return 8;
  return is_pyramid(e) ? 5 : 4;
}

int num_faces(TreeShape s, const Element& e) {
  if (s == TreeShape::hex) return 6;
  return is_pyramid(e) ? 5 : 4;
}

int cube_id(const Element& e, int j) {
  if (j <= 0 || j > e.level) fail("cube_id: level out of range");
  return cube_id_at(e.x, e.y, e.z, j);
}

Element child(TreeShape s, const Element& e, int i) {
  if (e.level >= max_level) fail("child: maximum level exceeded");
  if (i < 0 || i >= num_children(s, e)) fail("child: index out of range");
  const ChildSlot slot = child_slots(s, e.type)[i];
  const std::int32_t h2 = elem_len(e.level + 1);
  Element c;
  c.x = e.x + ((slot.cid & 1) ? h2 : 0);
  c.y = e.y + ((slot.cid & 2) ? h2 : 0);
  c.z = e.z + ((slot.cid & 4) ? h2 : 0);
  c.level = static_cast<std::int8_t>(e.level + 1);
  c.type = slot.type;
  if (s == TreeShape::hex) {
    c.min_tet_level = -1;
  } else if (slot.type >= 6) {
    c.min_tet_level = -1;
  } else if (is_pyramid(e)) {
    c.min_tet_level = c.level;  // a pyramid spawned this tetrahedron
  } else {
    c.min_tet_level = e.min_tet_level;
  }
  return c;
}

Element parent(TreeShape s, const Element& e) {
  if (e.level == 0) fail("parent: root has no parent");
  const std::int32_t h = elem_len(e.level);
  Element p;
  p.x = e.x & ~h;
  p.y = e.y & ~h;
  p.z = e.z & ~h;
  p.level = static_cast<std::int8_t>(e.level - 1);
  if (s == TreeShape::hex) {
    p.type = 0;
    p.min_tet_level = -1;
    return p;
  }
  const int cid = cube_id_at(e.x, e.y, e.z, e.level);
  if (is_pyramid(e)) {
    const int pt = tables::pyr_parent_type[e.type - 6][cid];
    assert(pt >= 6);
    p.type = static_cast<std::int8_t>(pt);
    p.min_tet_level = -1;
    return p;
  }
  if (s == TreeShape::pyramid && e.min_tet_level == e.level) {
    // Lowest tetrahedral ancestor: the parent is a pyramid whose type
    // follows from the z comparison (same z as the parent -> type 6).
    p.type = (cid & 4) ? 7 : 6;
    p.min_tet_level = -1;
    return p;
  }
  p.type = tables::tet_parent_type[e.type][cid];
  p.min_tet_level = e.min_tet_level;
  return p;
}

int local_index(TreeShape s, const Element& e) {
  if (e.level == 0) fail("local_index: root has no parent");
  const Element p = parent(s, e);
  const int cid = cube_id_at(e.x, e.y, e.z, e.level);
  const auto slots = child_slots(s, p.type);
  for (int i = 0; i < static_cast<int>(slots.size()); ++i)
    if (slots[i].cid == cid && slots[i].type == e.type) return i;
  fail("local_index: element is not a child of its parent type");
}

Element ancestor_at_level(TreeShape s, const Element& e, int lev) {
  if (lev < 0 || lev > e.level) fail("ancestor_at_level: bad level");
  Element cur = e;
  while (cur.level > lev) cur = parent(s, cur);
  return cur;
}

TypeTuples type_tuples(const Element& e) {
  TypeTuples t;
  std::uint8_t types[max_level + 1] = {};
  ancestor_types(TreeShape::pyramid, e, types);
  for (int j = 1; j <= e.level; ++j) {
    const int i = max_level - j;
    t.b[i] = types[j];
    t.b2 |= ((types[j] >> 2) & 1u) << i;
    t.b1 |= ((types[j] >> 1) & 1u) << i;
    t.b0 |= (types[j] & 1u) << i;
  }
  return t;
}

uint128 sfc_index(TreeShape s, const Element& e) {
  std::uint8_t types[max_level + 1] = {};
  if (s != TreeShape::hex) ancestor_types(s, e, types);
  uint128 key = 0;
  for (int j = 1; j <= e.level; ++j) {
    const int b = max_level - j;
    const unsigned group = (((e.z >> b) & 1) << 5) | (((e.y >> b) & 1) << 4) |
                           (((e.x >> b) & 1) << 3) | types[j];
    key |= static_cast<uint128>(group) << (6 * b);
  }
  return key;
}

Ordering compare(TreeShape s, const Element& a, const Element& b) {
  const uint128 ka = sfc_index(s, a), kb = sfc_index(s, b);
  if (ka != kb) return {ka < kb ? -1 : 1};
  if (a.level != b.level) return {a.level < b.level ? -1 : 1};
  return {0};
}

bool element_less(TreeShape s, const Element& a, const Element& b) {
  return compare(s, a, b).less();
}

bool is_ancestor(TreeShape s, const Element& a, const Element& d) {
  if (a.level > d.level) return false;
  return ancestor_at_level(s, d, a.level) == a;
}

std::uint64_t num_descendants_at_level(TreeShape s, const Element& e, int lev) {
  if (lev < e.level || lev > max_level) fail("num_descendants_at_level: bad level");
  const int d = lev - e.level;
  if (s == TreeShape::hex) return pow_tab.p8[d];
  return descendant_count(e.type, d);
}

std::uint64_t linear_id(TreeShape s, const Element& e) {
  if (s == TreeShape::hex) {
    std::uint64_t id = 0;
    for (int j = 1; j <= e.level; ++j)
      id |= static_cast<std::uint64_t>(cube_id_at(e.x, e.y, e.z, j)) << (3 * (e.level - j));
    return id;
  }
  std::uint8_t types[max_level + 1] = {};
  types[0] = static_cast<std::uint8_t>(root_element(s).type);
  ancestor_types(s, e, types);
  std::uint64_t id = 0;
  for (int j = 1; j <= e.level; ++j) {
    const int cid = cube_id_at(e.x, e.y, e.z, j);
    const auto slots = child_slots(s, types[j - 1]);
    for (const ChildSlot& sl : slots) {
      if (sl.cid == cid && sl.type == types[j]) break;
      id += descendant_count(sl.type, e.level - j);
    }
  }
  return id;
}

Element element_from_linear_id(TreeShape s, int lev, std::uint64_t id) {
  if (lev < 0 || lev > max_level) fail("element_from_linear_id: bad level");
  Element cur = root_element(s);
  if (id >= num_descendants_at_level(s, cur, lev))
    fail("element_from_linear_id: id out of range");
  for (int j = 1; j <= lev; ++j) {
    const auto slots = child_slots(s, cur.type);
    int pick = -1;
    for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
      const std::uint64_t cnt = descendant_count(slots[i].type, lev - j);
      if (id < cnt) {
        pick = i;
        break;
      }
      id -= cnt;
    }
    assert(pick >= 0);
    cur = child(s, cur, pick);
  }
  assert(id == 0);
  return cur;
}

Element first_descendant(TreeShape s, const Element& e, int lev) {
  if (lev < e.level || lev > max_level) fail("first_descendant: bad level");
  (void)s;
  Element d = e;
  d.level = static_cast<std::int8_t>(lev);
  return d;  // slot 0 keeps anchor and type at every step
}

Element last_descendant(TreeShape s, const Element& e, int lev) {
  if (lev < e.level || lev > max_level) fail("last_descendant: bad level");
  (void)s;
  const std::int32_t d = elem_len(e.level) - elem_len(lev);
  Element r = e;
  r.x += d;
  r.y += d;
  r.z += d;
  r.level = static_cast<std::int8_t>(lev);
  return r;  // the last slot shifts by (1,1,1) and keeps the type
}

Element successor_same_level(TreeShape s, const Element& e) {
  const std::uint64_t id = linear_id(s, e);
  const std::uint64_t total = num_descendants_at_level(s, root_element(s), e.level);
  if (id + 1 >= total) fail("successor_same_level: already the last element");
  return element_from_linear_id(s, e.level, id + 1);
}

bool is_family(TreeShape s, std::span<const Element> siblings) {
  if (siblings.empty() || siblings[0].level == 0) return false;
  const Element p = parent(s, siblings[0]);
  const int n = num_children(s, p);
  if (static_cast<int>(siblings.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (!(siblings[i] == child(s, p, i))) return false;
  return true;
}

VertexArray vertex_coords(TreeShape s, const Element& e) {
  VertexArray out{};
  const std::int32_t h = elem_len(e.level);
  if (s == TreeShape::hex) {
    for (int i = 0; i < 8; ++i)
      out[i] = {e.x + ((i & 1) ? h : 0), e.y + ((i & 2) ? h : 0), e.z + ((i & 4) ? h : 0)};
    return out;
  }
  if (is_pyramid(e)) {
    const auto& c = tables::pyr_corners[e.type - 6];
    for (int i = 0; i < 5; ++i)
      out[i] = {e.x + c[i].x * h, e.y + c[i].y * h, e.z + c[i].z * h};
    return out;
  }
  const auto& c = tables::tet_corners[e.type];
  for (int i = 0; i < 4; ++i)
    out[i] = {e.x + c[i].x * h, e.y + c[i].y * h, e.z + c[i].z * h};
  return out;
}

int resolve_min_tet_level(std::int32_t x, std::int32_t y, std::int32_t z, int level, int type) {
  if (type >= 6) return -1;
  // Descend from the root pyramid; at each level pick the child whose
  // region contains the target's barycenter (exact integer arithmetic).
  const CornerSum cs = corner_sum(type);
  const std::int64_t hl = elem_len(level);
  const std::int64_t bx = std::int64_t{cs.k} * x + cs.sx * hl;
  const std::int64_t by = std::int64_t{cs.k} * y + cs.sy * hl;
  const std::int64_t bz = std::int64_t{cs.k} * z + cs.sz * hl;
  int cur_type = 6;
  for (int j = 1; j <= level; ++j) {
    const int cid = cube_id_at(x, y, z, j);
    const std::int64_t hj = elem_len(j);
    const std::int64_t ax = std::int64_t{cs.k} * (x & ~(hj - 1));
    const std::int64_t ay = std::int64_t{cs.k} * (y & ~(hj - 1));
    const std::int64_t az = std::int64_t{cs.k} * (z & ~(hj - 1));
    int pick = -1;
    for (const ChildSlot& sl : child_slots(TreeShape::pyramid, cur_type)) {
      if (sl.cid != cid) continue;
      if (j == level) {
        if (sl.type == type) {
          pick = sl.type;
          break;
        }
        continue;
      }
      if (region_contains(sl.type, cs.k * hj, bx - ax, by - ay, bz - az)) {
        pick = sl.type;
        break;
      }
    }
    assert(pick >= 0 && "element is not part of the pyramidal tree");
    if (pick < 6) return j;  // tetrahedral subtrees stay tetrahedral
    cur_type = pick;
  }
  return -1;  // unreachable for tet input types
}

bool element_valid(TreeShape s, const Element& e) {
  if (e.level < 0 || e.level > max_level) return false;
  const std::int32_t mask = elem_len(e.level) - 1;
  if ((e.x & mask) || (e.y & mask) || (e.z & mask)) return false;
  if (e.x < 0 || e.y < 0 || e.z < 0 || e.x >= root_len || e.y >= root_len || e.z >= root_len)
    return false;
  switch (s) {
    case TreeShape::hex:
      return e.type == 0 && e.min_tet_level == -1;
    case TreeShape::tet:
      return e.type >= 0 && e.type < 6 && e.min_tet_level == 0;
    case TreeShape::pyramid:
      if (e.type < 0 || e.type > 7) return false;
      if (is_pyramid(e)) return e.min_tet_level == -1;
      return e.min_tet_level >= 1 && e.min_tet_level <= e.level;
  }
  return false;
}

}  // namespace hamr
