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

#include "gridk/caves.hpp"

#include <algorithm>

#include "gridk/errors.hpp"

namespace gridk {

namespace {

int cross(Vertex a, Vertex b) { return a.x * b.y - a.y * b.x; }

// Visits caves in carrier order starting with p at offset `from`; `visit`
// returns true to stop. Each straight run is walked once per call.
template <class Visit>
void scan_caves(std::span<const Vertex> v, bool closed, std::size_t from, Visit&& visit) {
  const std::size_t n = v.size();
  if (n < 4) return;
  auto at = [&](std::size_t k) -> const Vertex& { return v[closed ? k % n : k]; };
  auto dir = [&](std::size_t k) { return direction(at(k), at(k + 1)); };
  const std::size_t end = closed ? from + n : n - 3;
  std::size_t k = from;
  while (k < end) {
    auto d = dir(k);
    auto w = dir(k + 1);
    if (!d || !w) return;
    if (*w == *d || *w == opposite(*d)) {
      ++k;
      continue;
    }
    const std::size_t last_edge = closed ? k + n - 2 : n - 2;
    std::size_t j = k + 2;
    while (j <= last_edge && dir(j) == w) ++j;
    if (j > last_edge) return;
    if (dir(j) == opposite(*d)) {
      Cave c;
      c.carrier_kind = closed ? CarrierKind::Cycle : CarrierKind::Path;
      c.start = closed ? k % n : k;
      c.end = closed ? (j + 1) % n : j + 1;
      c.first = *d;
      c.middle = *w;
      const std::size_t r = j - k - 1;
      Vertex p = at(k);
      for (std::size_t s = 1; s < r; ++s) c.inside.push_back(p + static_cast<int>(s) * unit(*w));
      if (visit(c)) return;
    }
    k = std::max(k + 1, j - 1);
  }
}

}  // namespace

std::optional<Cave> cave_at(std::span<const Vertex> carrier, bool closed, std::size_t p_index) {
  std::optional<Cave> out;
  const std::size_t n = carrier.size();
  if (n < 4 || (!closed && p_index + 3 >= n) || (closed && p_index >= n)) return out;
  scan_caves(carrier, closed, p_index, [&](const Cave& c) {
    if (c.start == p_index) out = c;
    return true;
  });
  return out;
}

std::optional<Cave> next_cave(const Path& p, std::size_t from) {
  std::optional<Cave> out;
  scan_caves(p.vertices, false, from, [&](const Cave& c) {
    out = c;
    return true;
  });
  return out;
}

std::optional<Cave> next_cave(const Cycle& cyc, std::size_t from) {
  std::optional<Cave> out;
  if (cyc.size() == 0) return out;
  scan_caves(cyc.vertices, true, from % cyc.size(), [&](const Cave& c) {
    out = c;
    return true;
  });
  return out;
}

std::vector<Cave> all_caves(std::span<const Vertex> carrier, bool closed) {
  std::vector<Cave> out;
  scan_caves(carrier, closed, 0, [&](const Cave& c) {
    out.push_back(c);
    return false;
  });
  return out;
}

bool is_contractible(const Cave& c, const VertexSet& occupied) {
  for (const auto& v : c.inside)
    if (occupied.count(v) != 0) return false;
  return true;
}

bool is_contractible(const Cave& c, const Path& p) {
  return is_contractible(c, VertexSet(p.vertices.begin(), p.vertices.end()));
}

bool is_contractible(const Cave& c, const Cycle& cyc) {
  return is_contractible(c, VertexSet(cyc.vertices.begin(), cyc.vertices.end()));
}

Path contract(const Path& p, const Cave& c) {
  if (!is_contractible(c, p))
    throw GridError(ErrorKind::NotContractible, "not-contractible",
                    "cave at " + to_string(p.vertices[c.start]) + " is not contractible");
  Path out;
  out.vertices.reserve(p.size() - 2);
  out.vertices.insert(out.vertices.end(), p.vertices.begin(),
                      p.vertices.begin() + static_cast<std::ptrdiff_t>(c.start) + 1);
  out.vertices.insert(out.vertices.end(), c.inside.begin(), c.inside.end());
  out.vertices.insert(out.vertices.end(), p.vertices.begin() + static_cast<std::ptrdiff_t>(c.end),
                      p.vertices.end());
  return out;
}

Cycle contract(const Cycle& cyc, const Cave& c) {
  if (!is_contractible(c, cyc))
    throw GridError(ErrorKind::NotContractible, "not-contractible",
                    "cave at " + to_string(cyc.vertices[c.start]) + " is not contractible");
  const std::size_t n = cyc.size();
  std::vector<Vertex> ring;
  ring.reserve(n - 2);
  ring.push_back(cyc.vertices[c.start]);
  ring.insert(ring.end(), c.inside.begin(), c.inside.end());
  for (std::size_t k = c.end; k != c.start; k = (k + 1) % n) ring.push_back(cyc.vertices[k]);
  return canonical_cycle(std::move(ring));
}

bool is_convex(const Cave& c, long long orientation_area2) {
  long long turn = cross(unit(c.first), unit(c.middle));
  return turn * orientation_area2 > 0;
}

bool is_convex(const Cave& c, const Cycle& cyc) { return is_convex(c, signed_area2(cyc.vertices)); }

bool cave_contains_edge(const Cave& c, std::span<const Vertex> carrier, Edge e) {
  const std::size_t n = carrier.size();
  std::size_t k = c.start;
  for (std::size_t step = 0; step < c.edge_count(); ++step) {
    Vertex a = carrier[k % n], b = carrier[(k + 1) % n];
    if ((a == e.a && b == e.b) || (a == e.b && b == e.a)) return true;
    k = (k + 1) % n;
  }
  return false;
}

std::optional<Cave> find_convex_contractible_cave(const Cycle& cyc, std::size_t start, Edge avoid) {
  std::optional<Cave> out;
  if (cyc.size() < 4) return out;
  const long long area = signed_area2(cyc.vertices);
  scan_caves(cyc.vertices, true, start % cyc.size(), [&](const Cave& c) {
    if (cave_contains_edge(c, cyc.vertices, avoid) || !is_convex(c, area)) return false;
    out = c;
    return true;
  });
  return out;
}

std::optional<Cave> first_contractible_convex_cave(std::span<const Vertex> ring, std::size_t start,
                                                   Edge avoid) {
  std::optional<Cave> out;
  if (ring.size() < 4) return out;
  const long long area = signed_area2(ring);
  VertexSet occupied(ring.begin(), ring.end());
  scan_caves(ring, true, start % ring.size(), [&](const Cave& c) {
    if (cave_contains_edge(c, ring, avoid) || !is_convex(c, area) ||
        !is_contractible(c, occupied))
      return false;
    out = c;
    return true;
  });
  return out;
}

}  // namespace gridk
