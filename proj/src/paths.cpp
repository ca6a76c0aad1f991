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

#include "gridk/paths.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gridk/errors.hpp"

namespace gridk {

namespace {

// Vertex -> path index; dense over the bounding box when that is affordable.
class Occupancy {
 public:
  explicit Occupancy(std::span<const Vertex> vs) : n_(static_cast<long long>(vs.size())) {
    x0_ = x1_ = vs.front().x;
    y0_ = y1_ = vs.front().y;
    for (const auto& v : vs) {
      x0_ = std::min(x0_, v.x);
      x1_ = std::max(x1_, v.x);
      y0_ = std::min(y0_, v.y);
      y1_ = std::max(y1_, v.y);
    }
    h_ = static_cast<long long>(y1_) - y0_ + 1;
    const long long area = (static_cast<long long>(x1_) - x0_ + 1) * h_;
    dense_ = area <= 64 * n_ + 4096;
    if (dense_) cells_.assign(static_cast<std::size_t>(area), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) put(vs[i], static_cast<long long>(i));
  }

  // Index of v on the path, or -1.
  long long at(Vertex v) const {
    if (v.x < x0_ || v.x > x1_ || v.y < y0_ || v.y > y1_) return -1;
    if (dense_) return cells_[cell(v)];
    auto it = sparse_.find(v);
    return it == sparse_.end() ? -1 : it->second;
  }

  long long size() const { return n_; }

  // Tracks the contraction of cave c; `after` is the contracted path.
  void contract(std::span<const Vertex> before, const Cave& c, std::span<const Vertex> after) {
    for (std::size_t i = c.start + 1; i < c.end; ++i) erase(before[i]);
    for (std::size_t i = c.start + 1; i < after.size(); ++i) put(after[i], static_cast<long long>(i));
    n_ = static_cast<long long>(after.size());
  }

 private:
  std::size_t cell(Vertex v) const {
    return static_cast<std::size_t>((static_cast<long long>(v.x) - x0_) * h_ + (v.y - y0_));
  }
  void put(Vertex v, long long i) {
    if (dense_) cells_[cell(v)] = i;
    else sparse_[v] = i;
  }
  void erase(Vertex v) {
    if (dense_) cells_[cell(v)] = -1;
    else sparse_.erase(v);
  }

  long long n_;
  int x0_, x1_, y0_, y1_;
  long long h_;
  bool dense_;
  std::vector<long long> cells_;
  std::unordered_map<Vertex, long long, VertexHash> sparse_;
};

// Occupancy seen from either end of the path.
class IndexView {
 public:
  IndexView(const Occupancy& occ, bool reversed) : occ_(occ), reversed_(reversed) {}

  long long at(Vertex v) const {
    const long long i = occ_.at(v);
    return i < 0 || !reversed_ ? i : occ_.size() - 1 - i;
  }

  bool free(const Cave& c) const {
    for (const auto& v : c.inside)
      if (occ_.at(v) >= 0) return false;
    return true;
  }

 private:
  const Occupancy& occ_;
  bool reversed_;
};

struct ChainResult {
  std::optional<Cave> found;
  std::optional<Cave> blocked_by_t;
  bool blocked_by_s = false;
};

class CaveSearch {
 public:
  CaveSearch(std::span<const Vertex> vs, IndexView occ, CaveSearchStats* stats)
      : vs_(vs), occ_(occ), stats_(stats) {}

  // Contractible cave of vs, or nullopt when the chain ends at s only or s
  // lies inside the cycle closed at t.
  std::optional<Cave> run() {
    auto first = next_cave(Path{{vs_.begin(), vs_.end()}}, 0);
    if (!first) throw std::logic_error("non-monotone path without a cave");
    const Cave& c = *first;
    if (occ_.free(c)) return c;

    ChainResult chain;
    descend(c, chain);
    if (chain.found) return chain.found;
    if (!chain.blocked_by_t) return std::nullopt;
    return close_at_t(*chain.blocked_by_t);
  }

  bool s_inside_q() const { return s_inside_q_; }

 private:
  // Walks the caves blocked by c in carrier order.
  void descend(const Cave& c, ChainResult& out) {
    if (stats_) ++stats_->chain_steps;
    if (auto cave = shortcut(c)) {
      out.found = cave;
      return;
    }
    const std::size_t last = vs_.size() - 1;
    std::size_t j = 0;
    const auto& in = c.inside;
    while (j < in.size()) {
      const long long idx = occ_.at(in[j]);
      if (idx < 0) {
        ++j;
        continue;
      }
      long long lo = idx, hi = idx;
      std::size_t k = j + 1;
      while (k < in.size()) {
        const long long nx = occ_.at(in[k]);
        if (nx < 0 || std::abs(nx - hi) != 1) break;
        hi = nx;
        ++k;
      }
      j = k;
      if (lo > hi) std::swap(lo, hi);
      if (lo == 0) {
        out.blocked_by_s = true;
        continue;
      }
      if (static_cast<std::size_t>(hi) == last) {
        if (!out.blocked_by_t) out.blocked_by_t = c;
        continue;
      }
      auto inner = cave_at(vs_, false, static_cast<std::size_t>(lo - 1));
      if (!inner || inner->end != static_cast<std::size_t>(hi + 1))
        throw std::logic_error("blocking run does not form a cave");
      if (occ_.free(*inner)) {
        out.found = inner;
        return;
      }
      descend(*inner, out);
      if (out.found) return;
    }
  }

  // A path vertex on the inside next to p or q closes a three-edge cave.
  std::optional<Cave> shortcut(const Cave& c) {
    const Vertex w = unit(c.middle);
    const std::size_t i = c.start, j = c.end;
    std::optional<Cave> cave;
    if (i >= 1 && vs_[i - 1] == vs_[i] + w) cave = cave_at(vs_, false, i - 1);
    else if (j + 1 < vs_.size() && vs_[j + 1] == vs_[j] - w) cave = cave_at(vs_, false, j - 2);
    if (!cave) return cave;
    if (cave->depth() != 0) throw std::logic_error("shortcut cave is not a three-edge cave");
    if (stats_) ++stats_->shortcuts;
    return cave;
  }

  // The cycle Q = v ... t plus the edge (t, v), v the cave vertex next to t.
  std::optional<Cave> close_at_t(const Cave& c) {
    const Vertex t = vs_.back();
    const Vertex v = t + unit(c.first);
    const long long iv = occ_.at(v);
    if (iv < 0) throw std::logic_error("t is not inside its blocking cave");
    std::span<const Vertex> ring = vs_.subspan(static_cast<std::size_t>(iv));
    if (strictly_inside(ring, vs_.front())) {
      s_inside_q_ = true;
      return std::nullopt;
    }
    if (stats_) ++stats_->cycle_q;
    auto q = first_contractible_convex_cave(ring, 0, Edge{t, v});
    if (!q) return std::nullopt;
    auto cave = cave_at(vs_, false, static_cast<std::size_t>(iv) + q->start);
    if (!cave || !occ_.free(*cave)) return std::nullopt;
    return cave;
  }

  std::span<const Vertex> vs_;
  IndexView occ_;
  CaveSearchStats* stats_;
  bool s_inside_q_ = false;
};

std::optional<Cave> any_contractible(std::span<const Vertex> vs, IndexView occ) {
  for (const auto& c : all_caves(vs, false))
    if (occ.free(c)) return c;
  return std::nullopt;
}

GridError no_path(const std::string& reason, const std::string& what, long long l,
                  std::optional<long long> longest = std::nullopt) {
  GridError e(ErrorKind::NoSuchPath, reason, what);
  e.shortest = l;
  e.longest = longest;
  return e;
}

void check_endpoints(const RectGrid& r, Vertex s, Vertex t) {
  if (!r.contains(s) || !r.contains(t))
    throw GridError(ErrorKind::VertexOutOfGrid, "out-of-grid", "endpoint outside the grid");
}

long long ceil_sqrt(long long v) {
  auto q = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
  while (q * q < v) ++q;
  while (q > 0 && (q - 1) * (q - 1) >= v) --q;
  return q;
}

// Width and height of the square or band holding more than `want` vertices.
std::pair<int, int> shape_for(const RectGrid& r, long long want) {
  if (want + 1 > r.size()) return {r.m, r.n};
  const long long side = ceil_sqrt(want + 1);
  const long long small = std::min(r.m, r.n);
  if (small >= side) return {static_cast<int>(side), static_cast<int>(side)};
  const long long len = std::min<long long>(std::max(r.m, r.n), (want + small) / small);
  if (r.m >= r.n) return {static_cast<int>(len), r.n};
  return {r.m, static_cast<int>(len)};
}

// Lowest origin of a length-`len` window starting at lo or later and reaching b.
int window(int b, int len, int lo) { return std::max(lo, b - len + 1); }

// Origin of a window starting at `a` and reaching toward `toward`.
int window_toward(int a, int toward, int len, int lo, int hi) {
  if (toward >= a) return std::max(lo, std::min(a, hi - len + 1));
  return std::min(hi - len + 1, std::max(lo, a - len + 1));
}

Path build_initial(const RectGrid& r, Vertex s, Vertex t, long long k) {
  const auto [a, b] = shape_for(r, k + 2);
  const bool both = std::abs(s.x - t.x) < a && std::abs(s.y - t.y) < b;
  Path p;
  if (both) {
    RectGrid sub{a, b, window(std::max(s.x, t.x), a, r.ox),
                 window(std::max(s.y, t.y), b, r.oy)};
    p = longest_path(sub, s, t);
  } else {
    RectGrid sub{a, b, window_toward(s.x, t.x, a, r.ox, r.max_x()),
                 window_toward(s.y, t.y, b, r.oy, r.max_y())};
    const Vertex v{std::clamp(t.x, sub.ox, sub.max_x()), std::clamp(t.y, sub.oy, sub.max_y())};
    if (v == s) throw std::logic_error("initial window collapsed onto s");
    p = longest_path(sub, s, v);
    // Leave the window on the first step so both halves stay disjoint.
    const bool x_exits = (t.x > sub.max_x() && v.x == sub.max_x()) || (t.x < sub.ox && v.x == sub.ox);
    auto tail = staircase(v, t, !x_exits);
    p.vertices.insert(p.vertices.end(), tail.begin() + 1, tail.end());
  }
  if (static_cast<long long>(p.size()) < k) p = longest_path(r, s, t);
  return p;
}


Cave search_cave(const Path& p, const Occupancy& occ, CaveSearchStats* stats) {
  if (is_monotone(p))
    throw GridError(ErrorKind::PathIsMonotone, "monotone", "a monotone path has no cave");
  if (stats) ++stats->calls;
  {
    CaveSearch search(p.vertices, IndexView(occ, false), stats);
    if (auto c = search.run()) return *c;
  }
  // Flip the direction so that s and t exchange roles.
  if (stats) ++stats->reversals;
  std::vector<Vertex> rev(p.vertices.rbegin(), p.vertices.rend());
  {
    CaveSearch search(rev, IndexView(occ, true), stats);
    if (auto c = search.run()) {
      const std::size_t n = rev.size() - 1;
      auto back = cave_at(p.vertices, false, n - c->end);
      if (!back || back->end != n - c->start) throw std::logic_error("reversed cave did not map back");
      return *back;
    }
  }
  if (stats) ++stats->fallbacks;
  if (auto c = any_contractible(p.vertices, IndexView(occ, false))) return *c;
  throw std::logic_error("non-monotone path without a contractible cave");
}

}  // namespace

Cave find_contractible_cave(const Path& p, CaveSearchStats* stats) {
  if (p.size() < 2)
    throw GridError(ErrorKind::PathIsMonotone, "monotone", "a monotone path has no cave");
  return search_cave(p, Occupancy(p.vertices), stats);
}

Path shrink_path(const Path& p, const RectGrid& r, long long k, const PathShrinkObserver& observer,
                 CaveSearchStats* stats) {
  auto diag = validate_path(p, r);
  if (!diag.ok) throw GridError(ErrorKind::InvalidInput, "invalid-path", diag.violation);
  const long long len = static_cast<long long>(p.size());
  const long long l = shortest_len(p.front(), p.back());
  if ((len - k) % 2 != 0)
    throw GridError(ErrorKind::ParityMismatch, "parity",
                    "length " + std::to_string(k) + " has the wrong parity for these endpoints");
  if (k < l)
    throw GridError(ErrorKind::BelowShortest, "range",
                    "length " + std::to_string(k) + " is below the shortest " + std::to_string(l));
  if (k > len)
    throw GridError(ErrorKind::InvalidInput, "range", "cannot lengthen a path by shrinking");

  Path cur = p;
  Occupancy occ(cur.vertices);
  while (static_cast<long long>(cur.size()) > k) {
    const Cave c = search_cave(cur, occ, stats);
    Path next;
    next.vertices.reserve(cur.size() - 2);
    next.vertices.insert(next.vertices.end(), cur.vertices.begin(),
                         cur.vertices.begin() + static_cast<std::ptrdiff_t>(c.start) + 1);
    next.vertices.insert(next.vertices.end(), c.inside.begin(), c.inside.end());
    next.vertices.insert(next.vertices.end(),
                         cur.vertices.begin() + static_cast<std::ptrdiff_t>(c.end), cur.vertices.end());
    occ.contract(cur.vertices, c, next.vertices);
    if (observer) observer(cur, c, next);
    cur = std::move(next);
  }
  return cur;
}

bool path_exists(const RectGrid& r, Vertex s, Vertex t, long long k) {
  check_endpoints(r, s, t);
  if (s == t) throw GridError(ErrorKind::SameVertex, "same-vertex", "s and t coincide");
  const long long l = shortest_len(s, t);
  if (k < l || (k - l) % 2 != 0 || k > r.size()) return false;
  if (static_cast<long long>(build_initial(r, s, t, k).size()) >= k) return true;
  return k <= longest_path_len(r, s, t);
}

Path initial_path_for_k(const RectGrid& r, Vertex s, Vertex t, long long k) {
  check_endpoints(r, s, t);
  const long long l = shortest_len(s, t);
  if (s == t) throw no_path("same-vertex", "s and t coincide", l);
  if ((k - l) % 2 != 0)
    throw no_path("parity", "length " + std::to_string(k) + " has the wrong parity", l);
  if (k < l) throw no_path("range", "length " + std::to_string(k) + " is below the shortest", l);
  Path p = build_initial(r, s, t, k);
  if (static_cast<long long>(p.size()) < k)
    throw no_path("range", "length " + std::to_string(k) + " exceeds the longest path", l,
                  static_cast<long long>(p.size()));
  auto diag = validate_path(p, r);
  if (!diag.ok) throw std::logic_error("initial path is invalid: " + diag.violation);
  return p;
}

Path find_path(const RectGrid& r, Vertex s, Vertex t, long long k) {
  Path p = initial_path_for_k(r, s, t, k);
  return shrink_path(p, r, k);
}

}  // namespace gridk
