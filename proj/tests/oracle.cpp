#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "hamr/neighbor.hpp"
#include "hamr/tables.hpp"

namespace hamr::oracle {
namespace {

constexpr IVec3 sentinel = {INT32_MIN, INT32_MIN, INT32_MIN};

std::array<std::int8_t, 4> face_corner_ids(TreeShape s, const Element& e, int f) {
  if (s == TreeShape::hex) {
    static constexpr std::array<std::array<std::int8_t, 4>, 6> hex_faces = {{
        {0, 2, 4, 6}, {1, 3, 5, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}, {0, 1, 2, 3}, {4, 5, 6, 7}}};
    return hex_faces[f];
  }
  if (is_pyramid(e)) return tables::pyr_faces[f];
  const auto& tf = tables::tet_corners;  // face i = all corners but i
  (void)tf;
  std::array<std::int8_t, 4> ids = {-1, -1, -1, -1};
  int k = 0;
  for (int c = 0; c < 4; ++c)
    if (c != f) ids[k++] = static_cast<std::int8_t>(c);
  return ids;
}

}  // namespace

FaceKey face_key(TreeShape s, const Element& e, int f) {
  const VertexArray vc = vertex_coords(s, e);
  const auto ids = face_corner_ids(s, e, f);
  FaceKey key = {sentinel, sentinel, sentinel, sentinel};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (ids[i] >= 0) key[n++] = vc[ids[i]];
  std::sort(key.begin(), key.begin() + n);
  return key;
}

std::vector<std::uint8_t> EnumeratedTree::ancestor_types(int l, std::uint32_t i) const {
  std::vector<std::uint8_t> types(l + 1);
  for (int lev = l; lev >= 0; --lev) {
    types[lev] = static_cast<std::uint8_t>(levels[lev][i].type);
    if (lev > 0) i = parent_idx[lev][i];
  }
  return types;
}

EnumeratedTree enumerate_tree(TreeShape s, int depth) {
  EnumeratedTree t;
  t.shape = s;
  t.levels.resize(depth + 1);
  t.parent_idx.resize(depth + 1);
  t.levels[0] = {root_element(s)};
  for (int l = 0; l < depth; ++l) {
    const auto& cur = t.levels[l];
    auto& nxt = t.levels[l + 1];
    auto& par = t.parent_idx[l + 1];
    for (std::uint32_t pi = 0; pi < cur.size(); ++pi) {
      const Element& e = cur[pi];
      for (int i = 0; i < num_children(s, e); ++i) {
        nxt.push_back(child(s, e, i));
        par.push_back(pi);
      }
    }
  }
  t.faces.resize(depth + 1);
  for (int l = 0; l <= depth; ++l) {
    for (std::uint32_t i = 0; i < t.levels[l].size(); ++i) {
      const Element& e = t.levels[l][i];
      for (int f = 0; f < num_faces(s, e); ++f)
        t.faces[l][face_key(s, e, f)].push_back({i, static_cast<std::int8_t>(f)});
    }
  }
  return t;
}

std::optional<std::pair<Element, int>> geometric_neighbor(const EnumeratedTree& t,
                                                          const Element& e, int f) {
  const auto& level_faces = t.faces.at(e.level);
  const auto it = level_faces.find(face_key(t.shape, e, f));
  if (it == level_faces.end()) std::abort();
  const auto& refs = it->second;
  if (refs.size() > 2) std::abort();  // a face is shared by at most two elements
  for (const auto& r : refs) {
    const Element& n = t.levels[e.level][r.idx];
    if (!(n == e)) return std::make_pair(n, static_cast<int>(r.face));
  }
  if (refs.size() != 1) std::abort();
  return std::nullopt;  // tree boundary
}

std::int64_t volume6(TreeShape s, const Element& e) {
  const VertexArray v = vertex_coords(s, e);
  auto det = [&](int a, int b, int c, int d) {
    const std::int64_t m[3][3] = {
        {v[b][0] - v[a][0], v[b][1] - v[a][1], v[b][2] - v[a][2]},
        {v[c][0] - v[a][0], v[c][1] - v[a][1], v[c][2] - v[a][2]},
        {v[d][0] - v[a][0], v[d][1] - v[a][1], v[d][2] - v[a][2]},
    };
    const std::int64_t r = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return r < 0 ? -r : r;
  };
  if (s == TreeShape::hex) {
    const std::int64_t h = elem_len(e.level);
    return 6 * h * h * h;
  }
  if (is_pyramid(e)) return det(0, 1, 2, 4) + det(0, 2, 3, 4);
  return det(0, 1, 2, 3);
}

bool hull_contains(TreeShape s, const Element& a, const Element& d) {
  // Interior point of a (scaled barycenter) orients each face plane; then
  // every corner of d must lie on the inner side of every face of a.
  const VertexArray va = vertex_coords(s, a);
  const VertexArray vd = vertex_coords(s, d);
  const int nc_a = num_vertices(s, a);
  const int nc_d = num_vertices(s, d);
  std::int64_t bx = 0, by = 0, bz = 0;
  for (int i = 0; i < nc_a; ++i) {
    bx += va[i][0];
    by += va[i][1];
    bz += va[i][2];
  }
  for (int f = 0; f < num_faces(s, a); ++f) {
    const auto ids = face_corner_ids(s, a, f);
    const auto& p0 = va[ids[0]];
    const auto& p1 = va[ids[1]];
    const auto& p2 = va[ids[2]];
    const std::int64_t ux = p1[0] - p0[0], uy = p1[1] - p0[1], uz = p1[2] - p0[2];
    const std::int64_t wx = p2[0] - p0[0], wy = p2[1] - p0[1], wz = p2[2] - p0[2];
    std::int64_t nx = uy * wz - uz * wy, ny = uz * wx - ux * wz, nz = ux * wy - uy * wx;
    // orient inward using the barycenter (scaled by corner count)
    const std::int64_t side = nx * (bx - std::int64_t{nc_a} * p0[0]) +
                              ny * (by - std::int64_t{nc_a} * p0[1]) +
                              nz * (bz - std::int64_t{nc_a} * p0[2]);
    if (side == 0) std::abort();
    if (side < 0) {
      nx = -nx;
      ny = -ny;
      nz = -nz;
    }
    for (int i = 0; i < nc_d; ++i) {
      const std::int64_t v = nx * (vd[i][0] - p0[0]) + ny * (vd[i][1] - p0[1]) +
                             nz * (vd[i][2] - p0[2]);
      if (v < 0) return false;
    }
  }
  return true;
}

}  // namespace hamr::oracle
