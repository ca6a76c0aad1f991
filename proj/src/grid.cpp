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

#include "gridk/grid.hpp"

#include <algorithm>
#include <deque>

#include "gridk/errors.hpp"

namespace gridk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VertexOutOfGrid: return "VertexOutOfGrid";
    case ErrorKind::NotContractible: return "NotContractible";
    case ErrorKind::NoCycle: return "NoCycle";
    case ErrorKind::NoSuchCycle: return "NoSuchCycle";
    case ErrorKind::BudgetInvalid: return "BudgetInvalid";
    case ErrorKind::EdgeNotInCycle: return "EdgeNotInCycle";
    case ErrorKind::NotSolid: return "NotSolid";
    case ErrorKind::NotHamiltonian: return "NotHamiltonian";
    case ErrorKind::PathIsMonotone: return "PathIsMonotone";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::BelowShortest: return "BelowShortest";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::NoSuchPath: return "NoSuchPath";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::optional<EdgeDir> direction(Vertex from, Vertex to) {
  Vertex d = to - from;
  if (d == Vertex{0, 1}) return EdgeDir::Up;
  if (d == Vertex{0, -1}) return EdgeDir::Down;
  if (d == Vertex{1, 0}) return EdgeDir::Right;
  if (d == Vertex{-1, 0}) return EdgeDir::Left;
  return std::nullopt;
}

SolidGrid::SolidGrid(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  set_.reserve(vertices_.size());
  set_.insert(vertices_.begin(), vertices_.end());
}

SolidGrid SolidGrid::from_rect(const RectGrid& r) {
  std::vector<Vertex> vs;
  vs.reserve(static_cast<std::size_t>(r.size()));
  for (int x = r.ox; x <= r.max_x(); ++x)
    for (int y = r.oy; y <= r.max_y(); ++y) vs.push_back({x, y});
  return SolidGrid(std::move(vs));
}

std::vector<Vertex> staircase(Vertex s, Vertex t, bool y_first) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(shortest_len(s, t)));
  Vertex cur = s;
  out.push_back(cur);
  auto walk_x = [&] {
    int sx = t.x > cur.x ? 1 : -1;
    while (cur.x != t.x) {
      cur.x += sx;
      out.push_back(cur);
    }
  };
  auto walk_y = [&] {
    int sy = t.y > cur.y ? 1 : -1;
    while (cur.y != t.y) {
      cur.y += sy;
      out.push_back(cur);
    }
  };
  if (y_first) {
    walk_y();
    walk_x();
  } else {
    walk_x();
    walk_y();
  }
  return out;
}

Path monotone_shortest_path(const RectGrid& r, Vertex s, Vertex t) {
  if (!r.contains(s) || !r.contains(t))
    throw GridError(ErrorKind::VertexOutOfGrid, "out-of-grid",
                    "endpoint outside grid: " + to_string(r.contains(s) ? t : s));
  return Path{staircase(s, t)};
}

bool is_monotone(std::span<const Vertex> vertices) {
  bool seen[4] = {false, false, false, false};
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto d = direction(vertices[i], vertices[i + 1]);
    if (!d) return false;
    if (seen[static_cast<int>(opposite(*d))]) return false;
    seen[static_cast<int>(*d)] = true;
  }
  return true;
}

bool is_monotone(const Path& p) { return is_monotone(std::span<const Vertex>(p.vertices)); }

long long signed_area2(std::span<const Vertex> ring) {
  long long acc = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex& a = ring[i];
    const Vertex& b = ring[(i + 1) % n];
    acc += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
  }
  return acc;
}

Cycle canonical_cycle(std::vector<Vertex> ring) {
  if (ring.empty()) return Cycle{};
  if (signed_area2(ring) > 0) std::reverse(ring.begin(), ring.end());
  auto smallest = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), smallest, ring.end());
  return Cycle{std::move(ring)};
}

bool strictly_inside(std::span<const Vertex> ring, Vertex p) {
  const std::size_t n = ring.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex a = ring[i], b = ring[(i + 1) % n];
    if (a == p) return false;
    if (a.x == b.x) {
      int lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
      if (a.x == p.x && p.y >= lo && p.y <= hi) return false;
      // Ray from p towards +x, nudged to y + 1/2 of a unit: half-open test.
      if (a.x > p.x && p.y >= lo && p.y < hi) inside = !inside;
    } else if (a.y == p.y) {
      int lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
      if (p.x >= lo && p.x <= hi) return false;
    }
  }
  return inside;
}

namespace {

Diagnostic check_walk(std::span<const Vertex> vs, const Membership& in_grid, bool closed) {
  if (vs.empty()) return Diagnostic::fail("empty vertex sequence");
  VertexSet seen;
  seen.reserve(vs.size() * 2);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (in_grid && !in_grid(vs[i]))
      return Diagnostic::fail("vertex " + std::to_string(i) + " " + to_string(vs[i]) +
                              " outside grid");
    if (!seen.insert(vs[i]).second)
      return Diagnostic::fail("vertex " + std::to_string(i) + " " + to_string(vs[i]) +
                              " repeated");
    if (i + 1 < vs.size() && !adjacent(vs[i], vs[i + 1]))
      return Diagnostic::fail("non-unit step " + to_string(vs[i]) + " -> " +
                              to_string(vs[i + 1]));
  }
  if (closed) {
    if (vs.size() < 4) return Diagnostic::fail("cycle shorter than 4");
    if (!adjacent(vs.back(), vs.front()))
      return Diagnostic::fail("cycle not closed: " + to_string(vs.back()) + " -> " +
                              to_string(vs.front()));
    if (vs.size() % 2 != 0) return Diagnostic::fail("odd cycle length");
  } else {
    bool same = color(vs.front()) == color(vs.back());
    bool odd = vs.size() % 2 == 1;
    if (same != odd) return Diagnostic::fail("length parity contradicts endpoint colors");
  }
  return Diagnostic::pass();
}

}  // namespace

Diagnostic validate_path(std::span<const Vertex> vertices, const Membership& in_grid) {
  return check_walk(vertices, in_grid, false);
}

Diagnostic validate_cycle(std::span<const Vertex> vertices, const Membership& in_grid) {
  return check_walk(vertices, in_grid, true);
}

bool is_solid(const SolidGrid& g) {
  if (g.size() == 0) return true;
  const auto& vs = g.vertices();
  int x0 = vs.front().x, x1 = vs.back().x;
  int y0 = vs.front().y, y1 = vs.front().y;
  for (const auto& v : vs) {
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  // Inflate by one so the frame is a single connected outside region.
  x0 -= 1; x1 += 1; y0 -= 1; y1 += 1;
  const long long w = x1 - x0 + 1, h = y1 - y0 + 1;
  std::vector<char> mark(static_cast<std::size_t>(w * h), 0);
  auto idx = [&](Vertex v) { return static_cast<std::size_t>((v.x - x0) * h + (v.y - y0)); };
  long long free_cells = w * h - static_cast<long long>(g.size());
  std::deque<Vertex> queue{{x0, y0}};
  mark[idx({x0, y0})] = 1;
  long long reached = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    ++reached;
    for (EdgeDir d : {EdgeDir::Up, EdgeDir::Down, EdgeDir::Left, EdgeDir::Right}) {
      Vertex u = v + unit(d);
      if (u.x < x0 || u.x > x1 || u.y < y0 || u.y > y1) continue;
      if (mark[idx(u)] || g.contains(u)) continue;
      mark[idx(u)] = 1;
      queue.push_back(u);
    }
  }
  return reached == free_cells;
}

}  // namespace gridk
