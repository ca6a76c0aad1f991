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

#pragma once

// Core lattice types. Lengths of paths and cycles are VERTEX COUNTS:
// a path of length k has k vertices and k-1 edges, a cycle of length k has
// k vertices and k edges.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace gridk {

enum class Color { White, Black };

struct Vertex {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
  // Lexicographic: x first, then y.
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex operator+(Vertex a, Vertex b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vertex operator-(Vertex a, Vertex b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vertex operator*(int k, Vertex a) { return {k * a.x, k * a.y}; }

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.x)) << 32) |
               static_cast<std::uint32_t>(v.y);
    return std::hash<std::uint64_t>{}(key * 0x9E3779B97F4A7C15ull);
  }
};

using VertexSet = std::unordered_set<Vertex, VertexHash>;

// White iff x + y is even.
constexpr Color color(Vertex v) { return ((v.x + v.y) & 1) == 0 ? Color::White : Color::Black; }

enum class EdgeDir { Up, Down, Left, Right };

constexpr EdgeDir opposite(EdgeDir d) {
  switch (d) {
    case EdgeDir::Up: return EdgeDir::Down;
    case EdgeDir::Down: return EdgeDir::Up;
    case EdgeDir::Left: return EdgeDir::Right;
    case EdgeDir::Right: return EdgeDir::Left;
  }
  return d;
}

constexpr Vertex unit(EdgeDir d) {
  switch (d) {
    case EdgeDir::Up: return {0, 1};
    case EdgeDir::Down: return {0, -1};
    case EdgeDir::Left: return {-1, 0};
    case EdgeDir::Right: return {1, 0};
  }
  return {0, 0};
}

// Direction of the unit step from -> to, or nullopt if they are not adjacent.
std::optional<EdgeDir> direction(Vertex from, Vertex to);

constexpr bool adjacent(Vertex a, Vertex b) {
  int dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy == 1;
}

// The m x n rectangle with lower-left corner (ox, oy).
struct RectGrid {
  int m = 1;
  int n = 1;
  int ox = 1;
  int oy = 1;

  constexpr bool contains(Vertex v) const {
    return v.x >= ox && v.x < ox + m && v.y >= oy && v.y < oy + n;
  }
  constexpr long long size() const { return static_cast<long long>(m) * n; }
  constexpr int max_x() const { return ox + m - 1; }
  constexpr int max_y() const { return oy + n - 1; }

  friend constexpr bool operator==(const RectGrid&, const RectGrid&) = default;
};

struct Edge {
  Vertex a;
  Vertex b;
};

// Open walk s = vertices.front() ... t = vertices.back().
struct Path {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// Closed walk; canonical form is clockwise (negative signed area, y up) and
// starts at the lexicographically smallest vertex.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Explicit finite grid graph (vertex-induced).
class SolidGrid {
 public:
  SolidGrid() = default;
  explicit SolidGrid(std::vector<Vertex> vertices);
  static SolidGrid from_rect(const RectGrid& r);

  bool contains(Vertex v) const { return set_.count(v) != 0; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

 private:
  std::vector<Vertex> vertices_;  // sorted, unique
  VertexSet set_;
};

// Vertex count of a shortest s-t path: |dx| + |dy| + 1.
constexpr long long shortest_len(Vertex s, Vertex t) {
  long long dx = s.x > t.x ? s.x - t.x : t.x - s.x;
  long long dy = s.y > t.y ? s.y - t.y : t.y - s.y;
  return dx + dy + 1;
}

// Staircase s -> t taking all x steps first. Throws VertexOutOfGrid.
Path monotone_shortest_path(const RectGrid& r, Vertex s, Vertex t);

// Same staircase without a containing grid; `y_first` swaps the axis order.
std::vector<Vertex> staircase(Vertex s, Vertex t, bool y_first = false);

bool is_monotone(const Path& p);
bool is_monotone(std::span<const Vertex> vertices);

// Twice the shoelace area of the closed polygon through `ring`.
long long signed_area2(std::span<const Vertex> ring);

// Reorients to clockwise and rotates to start at the smallest vertex.
Cycle canonical_cycle(std::vector<Vertex> ring);

// True iff `p` lies strictly inside the orthogonal polygon `ring`.
// Lattice points on the boundary are reported as outside.
bool strictly_inside(std::span<const Vertex> ring, Vertex p);

struct Diagnostic {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
  static Diagnostic pass() { return {}; }
  static Diagnostic fail(std::string why) { return {false, std::move(why)}; }
};

using Membership = std::function<bool(Vertex)>;

// Checks unit steps, simplicity, containment and the parity rule.
// A null membership skips the containment check.
Diagnostic validate_path(std::span<const Vertex> vertices, const Membership& in_grid);
Diagnostic validate_cycle(std::span<const Vertex> vertices, const Membership& in_grid);

inline Diagnostic validate_path(const Path& p, const RectGrid& r) {
  return validate_path(p.vertices, [&r](Vertex v) { return r.contains(v); });
}
inline Diagnostic validate_cycle(const Cycle& c, const RectGrid& r) {
  return validate_cycle(c.vertices, [&r](Vertex v) { return r.contains(v); });
}
inline Diagnostic validate_path(const Path& p, const SolidGrid& g) {
  return validate_path(p.vertices, [&g](Vertex v) { return g.contains(v); });
}
inline Diagnostic validate_cycle(const Cycle& c, const SolidGrid& g) {
  return validate_cycle(c.vertices, [&g](Vertex v) { return g.contains(v); });
}

// Complement of the vertex set in the infinite lattice is connected.
bool is_solid(const SolidGrid& g);

std::string to_string(Vertex v);

}  // namespace gridk
