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

#include "gridk/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>

#include "gridk/errors.hpp"

namespace gridk::oracle {

std::size_t default_bound() {
  if (const char* env = std::getenv("GRIDKPATH_ORACLE_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 20;
}

namespace {

void check_bound(const LatticeGraph& g, const Options& opts) {
  if (g.size() > opts.bound)
    throw GridError(ErrorKind::BoundExceeded, "bound",
                    "oracle instance has " + std::to_string(g.size()) +
                        " vertices, bound is " + std::to_string(opts.bound));
}

}  // namespace

LatticeGraph LatticeGraph::from_2d(std::span<const Vertex> vertices) {
  std::vector<Vertex3> coords;
  coords.reserve(vertices.size());
  for (auto v : vertices) coords.push_back({v.x, v.y, 0});
  return from_3d(coords);
}

LatticeGraph LatticeGraph::from_3d(std::span<const Vertex3> vertices) {
  LatticeGraph g;
  std::vector<Vertex3> coords(vertices.begin(), vertices.end());
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  g.coords_ = coords;
  std::map<Vertex3, int> index;
  for (std::size_t i = 0; i < coords.size(); ++i) index[coords[i]] = static_cast<int>(i);
  g.adj_.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Vertex3& c = coords[i];
    for (Vertex3 d : {Vertex3{1, 0, 0}, Vertex3{-1, 0, 0}, Vertex3{0, 1, 0}, Vertex3{0, -1, 0},
                      Vertex3{0, 0, 1}, Vertex3{0, 0, -1}}) {
      auto it = index.find({c.x + d.x, c.y + d.y, c.z + d.z});
      if (it != index.end()) g.adj_[i].push_back(it->second);
    }
  }
  return g;
}

LatticeGraph LatticeGraph::rect(int m, int n) {
  std::vector<Vertex> vs;
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= n; ++y) vs.push_back({x, y});
  return from_2d(vs);
}

LatticeGraph LatticeGraph::box(int m, int n, int o) {
  std::vector<Vertex3> vs;
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= o; ++z) vs.push_back({x, y, z});
  return from_3d(vs);
}

int LatticeGraph::index_of(Vertex v) const { return index_of(Vertex3{v.x, v.y, 0}); }

int LatticeGraph::index_of(Vertex3 v) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), v);
  if (it == coords_.end() || !(*it == v)) return -1;
  return static_cast<int>(it - coords_.begin());
}

std::vector<int> LatticeGraph::distances_from(int v) const {
  std::vector<int> dist(size(), -1);
  std::deque<int> queue{v};
  dist[static_cast<std::size_t>(v)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

namespace {

struct CycleSearch {
  const LatticeGraph& g;
  int k;
  int start = 0;
  bool prune;
  std::vector<char> used;
  std::vector<int> dist;

  bool dfs(int v, int depth) {
    if (depth == k) {
      for (int w : g.neighbors(v))
        if (w == start) return true;
      return false;
    }
    if (prune) {
      int need = k - depth + 1;  // edges still to walk back to start
      int d = dist[static_cast<std::size_t>(v)];
      if (d < 0 || d > need || (need - d) % 2 != 0) return false;
    }
    for (int w : g.neighbors(v)) {
      if (w <= start || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      bool found = dfs(w, depth + 1);
      used[static_cast<std::size_t>(w)] = 0;
      if (found) return true;
    }
    return false;
  }
};

struct PathSearch {
  const LatticeGraph& g;
  int t;
  int k;
  bool prune;
  std::vector<char> used;
  std::vector<int> dist;

  bool dfs(int v, int depth) {
    if (v == t) return depth == k;
    if (depth >= k) return false;
    if (prune) {
      int need = k - depth;  // edges still to walk to t
      int d = dist[static_cast<std::size_t>(v)];
      if (d < 0 || d > need || (need - d) % 2 != 0) return false;
    }
    for (int w : g.neighbors(v)) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      bool found = dfs(w, depth + 1);
      used[static_cast<std::size_t>(w)] = 0;
      if (found) return true;
    }
    return false;
  }
};

struct LongestSearch {
  const LatticeGraph& g;
  int t;
  bool prune;
  int best = 0;
  std::vector<char> used;
  std::vector<char> seen;

  // Vertices reachable from v through unused vertices (v included).
  int reachable(int v) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    int count = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++count;
      for (int w : g.neighbors(u)) {
        if (seen[static_cast<std::size_t>(w)] || used[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
    return count;
  }

  void dfs(int v, int depth) {
    if (v == t) {
      best = std::max(best, depth);
      return;
    }
    if (prune && depth - 1 + reachable(v) <= best) return;
    for (int w : g.neighbors(v)) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      dfs(w, depth + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  }
};

}  // namespace

bool exists_cycle(const LatticeGraph& g, int k, const Options& opts) {
  check_bound(g, opts);
  const int n = static_cast<int>(g.size());
  if (k < 3 || k > n) return false;
  CycleSearch search{g, k, 0, opts.prune, std::vector<char>(g.size(), 0), {}};
  for (int start = 0; start + k <= n; ++start) {
    search.start = start;
    if (opts.prune) search.dist = g.distances_from(start);
    search.used[static_cast<std::size_t>(start)] = 1;
    bool found = search.dfs(start, 1);
    search.used[static_cast<std::size_t>(start)] = 0;
    if (found) return true;
  }
  return false;
}

bool exists_path(const LatticeGraph& g, int s, int t, int k, const Options& opts) {
  check_bound(g, opts);
  if (k < 1 || k > static_cast<int>(g.size())) return false;
  PathSearch search{g, t, k, opts.prune, std::vector<char>(g.size(), 0), {}};
  if (opts.prune) search.dist = g.distances_from(t);
  search.used[static_cast<std::size_t>(s)] = 1;
  return search.dfs(s, 1);
}

int longest_path_len(const LatticeGraph& g, int s, int t, const Options& opts) {
  check_bound(g, opts);
  LongestSearch search{g, t, opts.prune, 0, std::vector<char>(g.size(), 0),
                       std::vector<char>(g.size(), 0)};
  search.used[static_cast<std::size_t>(s)] = 1;
  search.dfs(s, 1);
  return search.best;
}

std::vector<std::uint64_t> path_length_table(const LatticeGraph& g, int s, const Options& opts) {
  check_bound(g, opts);
  if (g.size() >= 64)
    throw GridError(ErrorKind::BoundExceeded, "bound", "path_length_table needs < 64 vertices");
  std::vector<std::uint64_t> table(g.size(), 0);
  std::vector<char> used(g.size(), 0);
  // Iterative DFS over all simple paths from s.
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> stack{{s, 0}};
  used[static_cast<std::size_t>(s)] = 1;
  table[static_cast<std::size_t>(s)] |= std::uint64_t{1} << 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next == nb.size()) {
      used[static_cast<std::size_t>(f.v)] = 0;
      stack.pop_back();
      continue;
    }
    int w = nb[f.next++];
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = 1;
    stack.push_back({w, 0});
    table[static_cast<std::size_t>(w)] |= std::uint64_t{1} << stack.size();
  }
  return table;
}

std::uint64_t cycle_length_mask(const LatticeGraph& g, const Options& opts) {
  check_bound(g, opts);
  if (g.size() >= 64)
    throw GridError(ErrorKind::BoundExceeded, "bound", "cycle_length_mask needs < 64 vertices");
  std::uint64_t mask = 0;
  const int n = static_cast<int>(g.size());
  std::vector<char> used(g.size(), 0);
  struct Frame {
    int v;
    std::size_t next;
  };
  for (int start = 0; start < n; ++start) {
    std::vector<Frame> stack{{start, 0}};
    used[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next == nb.size()) {
        used[static_cast<std::size_t>(f.v)] = 0;
        stack.pop_back();
        continue;
      }
      int w = nb[f.next++];
      if (w == start && stack.size() >= 3) mask |= std::uint64_t{1} << stack.size();
      if (w <= start || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      stack.push_back({w, 0});
    }
  }
  return mask;
}

namespace {

enum class Where { Inside, Boundary, Outside };

// Point location against an orthogonal polygon, all coordinates doubled so
// that edge midpoints are lattice points too.
Where locate2(std::span<const Vertex> ring, Vertex p2) {
  const std::size_t n = ring.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex a = 2 * ring[i], b = 2 * ring[(i + 1) % n];
    int xlo = std::min(a.x, b.x), xhi = std::max(a.x, b.x);
    int ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
    if (p2.x >= xlo && p2.x <= xhi && p2.y >= ylo && p2.y <= yhi) return Where::Boundary;
    if (a.x == b.x && a.x > p2.x && p2.y >= ylo && p2.y < yhi) inside = !inside;
  }
  return inside ? Where::Inside : Where::Outside;
}

int sgn(int v) { return (v > 0) - (v < 0); }

}  // namespace

std::vector<CaveRecord> enumerate_caves(std::span<const Vertex> carrier, bool closed) {
  std::vector<CaveRecord> out;
  const std::size_t n = carrier.size();
  if (n < 2) return out;
  const std::size_t edges = closed ? n : n - 1;
  auto edge_dir = [&](std::size_t e) {
    Vertex a = carrier[e % n], b = carrier[(e + 1) % n];
    return b - a;
  };
  auto opposite_dirs = [](Vertex d1, Vertex d2) { return d1 + d2 == Vertex{0, 0}; };
  VertexSet on_carrier(carrier.begin(), carrier.end());

  for (std::size_t a = 0; a < edges; ++a) {
    // Longest span considered: every edge but one on a cycle.
    const std::size_t max_span = closed ? edges - 1 : edges - a;
    for (std::size_t span = 2; span <= max_span; ++span) {
      std::size_t b = a + span - 1;
      if (!opposite_dirs(edge_dir(a), edge_dir(b))) continue;
      bool minimal = true;
      for (std::size_t i = a; i <= b && minimal; ++i)
        for (std::size_t j = i + 1; j <= b && minimal; ++j)
          if (!(i == a && j == b) && opposite_dirs(edge_dir(i), edge_dir(j))) minimal = false;
      if (!minimal) continue;

      CaveRecord rec;
      rec.start = a % n;
      rec.end = (b + 1) % n;
      Vertex p = carrier[rec.start], q = carrier[rec.end];
      if (p.x != q.x && p.y != q.y) continue;
      Vertex step{sgn(q.x - p.x), sgn(q.y - p.y)};
      for (Vertex v = p + step; !(v == q); v = v + step) rec.inside.push_back(v);
      rec.contractible = std::none_of(rec.inside.begin(), rec.inside.end(),
                                      [&](Vertex v) { return on_carrier.count(v) != 0; });
      if (closed) {
        bool ok = true;
        for (Vertex v = p; ok && !(v == q); v = v + step) {
          if (!(v == p) && locate2(carrier, 2 * v) == Where::Outside) ok = false;
          Vertex mid = 2 * v + step;
          if (locate2(carrier, mid) == Where::Outside) ok = false;
        }
        rec.convex = ok;
      }
      out.push_back(std::move(rec));
      break;  // a longer span from the same start edge cannot be minimal
    }
  }
  return out;
}

}  // namespace gridk::oracle
