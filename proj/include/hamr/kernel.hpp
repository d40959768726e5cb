#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "hamr/element.hpp"

// Per-element arithmetic for the three tree shapes. All functions are pure;
// elements are immutable values. Child indices are SFC-local indices: the
// i-th child is the i-th in space-filling-curve order.

namespace hamr {

int num_children(TreeShape s, const Element& e);
int num_vertices(TreeShape s, const Element& e);
int num_faces(TreeShape s, const Element& e);

// 3-bit sub-cube position of e at level j (0 < j <= e.level).
int cube_id(const Element& e, int j);

Element child(TreeShape s, const Element& e, int i);
Element parent(TreeShape s, const Element& e);
int local_index(TreeShape s, const Element& e);
Element ancestor_at_level(TreeShape s, const Element& e, int lev);

// Ancestor types of a pyramidal-tree element, as the level-keyed tuple and
// its three bit planes. b[i] is the type of the ancestor at level
// max_level - i (zero below the element's own level); bit i of plane k
// carries bit k of b[i].
struct TypeTuples {
  std::array<std::uint8_t, max_level> b{};
  std::uint32_t b2 = 0, b1 = 0, b0 = 0;
};
TypeTuples type_tuples(const Element& e);

// SFC key: the 6-dimensional Morton interleave of (B2, B1, B0, x, y, z),
// 6 bits per level, z bit first within a level. Valid for every shape
// (hexahedra contribute empty type planes).
uint128 sfc_index(TreeShape s, const Element& e);

// Total order: by sfc_index, ties broken by level (ancestors first).
Ordering compare(TreeShape s, const Element& a, const Element& b);
bool element_less(TreeShape s, const Element& a, const Element& b);

// Reflexive ancestor test.
bool is_ancestor(TreeShape s, const Element& a, const Element& d);

std::uint64_t num_descendants_at_level(TreeShape s, const Element& e, int lev);

// Rank of e among all level-(e.level) descendants of the root, in SFC order.
std::uint64_t linear_id(TreeShape s, const Element& e);
Element element_from_linear_id(TreeShape s, int lev, std::uint64_t id);
Element first_descendant(TreeShape s, const Element& e, int lev);
Element last_descendant(TreeShape s, const Element& e, int lev);
Element successor_same_level(TreeShape s, const Element& e);

// True iff the span is the complete, SFC-ordered set of children of one
// parent.
bool is_family(TreeShape s, std::span<const Element> siblings);

// Corner positions in root-cube integer coordinates (4, 5 or 8 entries).
using VertexArray = std::array<std::array<std::int32_t, 3>, 8>;
VertexArray vertex_coords(TreeShape s, const Element& e);

// Level of the lowest tetrahedral ancestor of the element with the given
// anchor/level/type in a pyramidal tree (-1 for pyramids). Used where a
// table construction yields an element whose ancestry is not known locally.
int resolve_min_tet_level(std::int32_t x, std::int32_t y, std::int32_t z, int level, int type);

// Consistency check of the element fields (coordinate alignment, type and
// min_tet_level ranges). Cheap; used by asserts and input validation.
bool element_valid(TreeShape s, const Element& e);

// Thin value facade binding a shape, for shape-generic forest code.
class ShapeKernel {
 public:
  explicit constexpr ShapeKernel(TreeShape s) : s_(s) {}
  constexpr TreeShape shape() const { return s_; }
  Element root() const { return root_element(s_); }
  int num_children(const Element& e) const { return hamr::num_children(s_, e); }
  Element child(const Element& e, int i) const { return hamr::child(s_, e, i); }
  Element parent(const Element& e) const { return hamr::parent(s_, e); }
  int local_index(const Element& e) const { return hamr::local_index(s_, e); }
  uint128 sfc_index(const Element& e) const { return hamr::sfc_index(s_, e); }
  Ordering compare(const Element& a, const Element& b) const { return hamr::compare(s_, a, b); }
  bool less(const Element& a, const Element& b) const { return element_less(s_, a, b); }
  bool is_ancestor(const Element& a, const Element& d) const { return hamr::is_ancestor(s_, a, d); }
  std::uint64_t num_descendants_at_level(const Element& e, int lev) const {
    return hamr::num_descendants_at_level(s_, e, lev);
  }
  std::uint64_t linear_id(const Element& e) const { return hamr::linear_id(s_, e); }
  Element element_from_linear_id(int lev, std::uint64_t id) const {
    return hamr::element_from_linear_id(s_, lev, id);
  }
  Element first_descendant(const Element& e, int lev) const {
    return hamr::first_descendant(s_, e, lev);
  }
  Element last_descendant(const Element& e, int lev) const {
    return hamr::last_descendant(s_, e, lev);
  }
  bool is_family(std::span<const Element> sib) const { return hamr::is_family(s_, sib); }
  VertexArray vertex_coords(const Element& e) const { return hamr::vertex_coords(s_, e); }

 private:
  TreeShape s_;
};

constexpr ShapeKernel shape_kernel(TreeShape s) { return ShapeKernel{s}; }

}  // namespace hamr
