// Copyright 2026 The gridk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridk/grid3d.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "gridk/cycles.hpp"
#include "gridk/errors.hpp"
#include "gridk/paths.hpp"

namespace gridk {

namespace {

constexpr AxisRoles kOrders[6] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

int coord(const Vertex3& v, int axis) { return axis == 0 ? v.x : axis == 1 ? v.y : v.z; }

Vertex3 relabel(const Vertex3& v, const AxisRoles& roles) {
  return {coord(v, roles[0]), coord(v, roles[1]), coord(v, roles[2])};
}

Vertex3 unlabel(const Vertex3& u, const AxisRoles& roles) {
  int c[3];
  c[roles[0]] = u.x;
  c[roles[1]] = u.y;
  c[roles[2]] = u.z;
  return {c[0], c[1], c[2]};
}

Grid3D relabel(const Grid3D& g, const AxisRoles& roles) {
  const int d[3] = {g.m, g.n, g.o};
  return {d[roles[0]], d[roles[1]], d[roles[2]]};
}

RectGrid flat(const Grid3D& g) { return RectGrid{g.m, g.n * g.o}; }

int color3(const Vertex3& v) { return (v.x + v.y + v.z) & 1; }

Diagnostic check_walk(const std::vector<Vertex3>& vs, const Grid3D& g, bool closed) {
  if (vs.empty()) return {false, "empty"};
  std::set<Vertex3> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.contains(vs[i])) return {false, "vertex " + to_string(vs[i]) + " outside the grid"};
    if (!seen.insert(vs[i]).second) return {false, "vertex " + to_string(vs[i]) + " repeated"};
    if (i + 1 < vs.size() && !adjacent(vs[i], vs[i + 1]))
      return {false, "non-unit step " + to_string(vs[i]) + " -> " + to_string(vs[i + 1])};
  }
  if (closed) {
    if (vs.size() < 4) return {false, "cycle shorter than 4"};
    if (!adjacent(vs.back(), vs.front())) return {false, "cycle does not close"};
    if (vs.size() % 2 != 0) return {false, "odd cycle"};
  } else {
    const bool same = color3(vs.front()) == color3(vs.back());
    if (same != (vs.size() % 2 == 1)) return {false, "length parity contradicts endpoint colors"};
  }
  return {true, ""};
}

// Rotation to the smallest vertex, direction toward the smaller neighbor.
Cycle3 canonical3(std::vector<Vertex3> ring) {
  auto it = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), it, ring.end());
  if (ring.size() > 2 && ring.back() < ring[1]) std::reverse(ring.begin() + 1, ring.end());
  return Cycle3{std::move(ring)};
}

std::optional<Path3> descend(const Grid3D& g, Vertex3 s, Vertex3 t, long long k,
                             const AxisRoles& roles) {
  const Grid3D h = relabel(g, roles);
  Vertex3 a = relabel(s, roles), b = relabel(t, roles);
  const bool swapped = b.z < a.z;
  if (swapped) std::swap(a, b);
  const RectGrid r = flat(h);
  const Vertex fa = map_F(a, h.n);
  for (int j = 0; j <= b.z - a.z; ++j) {
    const Vertex3 tj{b.x, b.y, b.z - j};
    if (tj == a) break;
    const long long want = k - j;
    const Vertex ft = map_F(tj, h.n);
    const long long l = shortest_len(fa, ft);
    if (want < l || (want - l) % 2 != 0) continue;
    if (!path_exists(r, fa, ft, want)) continue;
    Path p = find_path(r, fa, ft, want);
    std::vector<Vertex3> out;
    out.reserve(static_cast<std::size_t>(k));
    for (const auto& w : p.vertices) out.push_back(map_F_inv(w, h.n));
    bool clash = false;
    for (int i = j - 1; i >= 0; --i) {
      const Vertex3 ti{b.x, b.y, b.z - i};
      if (std::find(out.begin(), out.end(), ti) != out.end()) clash = true;
      out.push_back(ti);
    }
    if (clash) continue;
    for (auto& v : out) v = unlabel(v, roles);
    if (swapped) std::reverse(out.begin(), out.end());
    return Path3{std::move(out)};
  }
  return std::nullopt;
}

}  // namespace

Diagnostic validate_path3(const std::vector<Vertex3>& vs, const Grid3D& g) {
  return check_walk(vs, g, false);
}

Diagnostic validate_cycle3(const std::vector<Vertex3>& vs, const Grid3D& g) {
  return check_walk(vs, g, true);
}

bool cycle_exists_3d(const Grid3D& g, long long k) {
  for (const auto& roles : kOrders)
    if (cycle_exists(flat(relabel(g, roles)), k)) return true;
  return false;
}

Cycle3 find_cycle_3d(const Grid3D& g, long long k) {
  for (const auto& roles : kOrders) {
    const Grid3D h = relabel(g, roles);
    const RectGrid r = flat(h);
    if (!cycle_exists(r, k)) continue;
    Cycle c = find_cycle(r, k);
    std::vector<Vertex3> ring;
    ring.reserve(c.size());
    for (const auto& w : c.vertices) ring.push_back(unlabel(map_F_inv(w, h.n), roles));
    return canonical3(std::move(ring));
  }
  throw GridError(ErrorKind::NoSuchCycle, g.size() > 1 && k % 2 != 0 ? "parity" : "range",
                  "no cycle of length " + std::to_string(k) + " in the 3D grid");
}

bool path_exists_3d(const Grid3D& g, const Vertex3& s, const Vertex3& t, long long k) {
  if (!g.contains(s) || !g.contains(t))
    throw GridError(ErrorKind::VertexOutOfGrid, "out-of-grid", "endpoint outside the grid");
  if (s == t) throw GridError(ErrorKind::SameVertex, "same-vertex", "s and t coincide");
  const long long l = shortest_len(s, t);
  if (k < l || (k - l) % 2 != 0 || k > g.size()) return false;
  for (const auto& roles : kOrders)
    if (descend(g, s, t, k, roles)) return true;
  return false;
}

Path3 find_path_3d(const Grid3D& g, const Vertex3& s, const Vertex3& t, long long k) {
  if (!g.contains(s) || !g.contains(t))
    throw GridError(ErrorKind::VertexOutOfGrid, "out-of-grid", "endpoint outside the grid");
  const long long l = shortest_len(s, t);
  auto fail = [l](const std::string& reason, const std::string& what) {
    GridError e(ErrorKind::NoSuchPath, reason, what);
    e.shortest = l;
    return e;
  };
  if (s == t) throw fail("same-vertex", "s and t coincide");
  if ((k - l) % 2 != 0) throw fail("parity", "length " + std::to_string(k) + " has the wrong parity");
  if (k < l) throw fail("range", "length " + std::to_string(k) + " is below the shortest");
  if (k <= g.size())
    for (const auto& roles : kOrders)
      if (auto p = descend(g, s, t, k, roles)) return std::move(*p);
  throw fail("range", "no path of length " + std::to_string(k) + " between the endpoints");
}

}  // namespace gridk
