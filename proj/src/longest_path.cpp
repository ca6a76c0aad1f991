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

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gridk/errors.hpp"
#include "gridk/frontier_dp.hpp"
#include "gridk/paths.hpp"

namespace gridk {

namespace {

RectGrid flip(const RectGrid& r) { return RectGrid{r.n, r.m, r.oy, r.ox}; }
Vertex flip(Vertex v) { return {v.y, v.x}; }
Path flip(Path p) {
  for (auto& v : p.vertices) v = flip(v);
  return p;
}

// Hamiltonian cycle of block b holding every edge of one boundary line.
// `column` picks a vertical line (x = line) over a horizontal one (y = line).
std::vector<Vertex> block_cycle(const RectGrid& b, bool column, int line) {
  const int w = column ? b.m : b.n;  // even
  const int h = column ? b.n : b.m;
  std::vector<Vertex> ring;
  ring.reserve(static_cast<std::size_t>(w) * h);
  for (int y = 1; y <= h; ++y) ring.push_back({1, y});
  for (int x = 2; x <= w; ++x) {
    if (x % 2 == 0)
      for (int y = h; y >= 2; --y) ring.push_back({x, y});
    else
      for (int y = 2; y <= h; ++y) ring.push_back({x, y});
  }
  for (int x = w; x >= 2; --x) ring.push_back({x, 1});
  // Local column 1 is the full line; place it on `line`.
  const int lo = column ? b.ox : b.oy;
  const bool mirror = line != lo;
  for (auto& v : ring) {
    int across = mirror ? w + 1 - v.x : v.x;
    v = column ? Vertex{b.ox + across - 1, b.oy + v.y - 1} : Vertex{b.ox + v.y - 1, b.oy + across - 1};
  }
  return ring;
}

// Replaces an edge of p lying on the block's full line by a detour through
// the whole block. False when p has no such edge.
bool splice_block(Path& p, const RectGrid& b, bool column, int line, Vertex outward) {
  const auto& vs = p.vertices;
  const int from_line = column ? line - outward.x : line - outward.y;
  std::size_t at = vs.size();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    Vertex a = vs[i], c = vs[i + 1];
    bool on = column ? (a.x == from_line && c.x == from_line && a.y >= b.oy && a.y <= b.max_y() &&
                        c.y >= b.oy && c.y <= b.max_y())
                     : (a.y == from_line && c.y == from_line && a.x >= b.ox && a.x <= b.max_x() &&
                        c.x >= b.ox && c.x <= b.max_x());
    if (on) {
      at = i;
      break;
    }
  }
  if (at == vs.size()) return false;
  const auto ring = block_cycle(b, column, line);
  const Vertex a = vs[at] + outward, c = vs[at + 1] + outward;
  const auto n = ring.size();
  const auto ia = static_cast<std::size_t>(std::find(ring.begin(), ring.end(), a) - ring.begin());
  const bool forward_is_c = ring[(ia + 1) % n] == c;
  std::vector<Vertex> detour;
  detour.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    detour.push_back(ring[forward_is_c ? (ia + n - j) % n : (ia + j) % n]);
  if (detour.back() != c) throw std::logic_error("block cycle lost its boundary edge");
  p.vertices.insert(p.vertices.begin() + static_cast<std::ptrdiff_t>(at + 1), detour.begin(),
                    detour.end());
  return true;
}

// Parity-padded box around s and t with even margins to r on every side.
RectGrid core_box(const RectGrid& r, Vertex s, Vertex t, int pad) {
  auto axis = [pad](int a, int b, int lo_bound, int hi_bound) {
    int lo = std::max(lo_bound, std::min(a, b) - pad);
    int hi = std::min(hi_bound, std::max(a, b) + pad);
    if ((lo - lo_bound) % 2 != 0) --lo;
    if ((hi_bound - hi) % 2 != 0) ++hi;
    while (hi - lo + 1 < 4 && (lo > lo_bound || hi < hi_bound)) {
      if (lo > lo_bound) lo -= 2;
      else hi += 2;
    }
    return std::pair{lo, hi};
  };
  auto [x0, x1] = axis(s.x, t.x, r.ox, r.max_x());
  auto [y0, y1] = axis(s.y, t.y, r.oy, r.max_y());
  return RectGrid{x1 - x0 + 1, y1 - y0 + 1, x0, y0};
}

class Builder {
 public:
  Path solve(const RectGrid& r, Vertex s, Vertex t) {
    if (std::min(r.m, r.n) <= kDpMaxHeight) return longest_path_dp(r, s, t);
    const long long bound = longest_path_upper_bound(r, s, t);
    Path best;
    auto keep = [&best](Path p) {
      if (p.size() > best.size()) best = std::move(p);
    };
    for (int pad : {0, 2, 4}) {
      RectGrid core = core_box(r, s, t, pad);
      if (core == r) break;
      auto grown = expand(solve(core, s, t), core, r);
      if (!grown) continue;
      if (static_cast<long long>(grown->size()) == bound) return std::move(*grown);
      keep(std::move(*grown));
    }
    const bool horizontal = std::abs(s.y - t.y) >= std::abs(s.x - t.x);
    Path cut = horizontal ? split(r, s, t, bound) : flip(split(flip(r), flip(s), flip(t), bound));
    keep(std::move(cut));
    if (best.size() == 0) throw std::logic_error("longest path construction failed");
    return best;
  }

 private:
  std::optional<Path> expand(Path p, const RectGrid& core, const RectGrid& r) {
    if (core.ox > r.ox) {
      RectGrid b{core.ox - r.ox, core.n, r.ox, core.oy};
      if (!splice_block(p, b, true, core.ox - 1, {-1, 0})) return std::nullopt;
    }
    if (core.max_x() < r.max_x()) {
      RectGrid b{r.max_x() - core.max_x(), core.n, core.max_x() + 1, core.oy};
      if (!splice_block(p, b, true, core.max_x() + 1, {1, 0})) return std::nullopt;
    }
    if (core.oy > r.oy) {
      RectGrid b{r.m, core.oy - r.oy, r.ox, r.oy};
      if (!splice_block(p, b, false, core.oy - 1, {0, -1})) return std::nullopt;
    }
    if (core.max_y() < r.max_y()) {
      RectGrid b{r.m, r.max_y() - core.max_y(), r.ox, core.max_y() + 1};
      if (!splice_block(p, b, false, core.max_y() + 1, {0, 1})) return std::nullopt;
    }
    return p;
  }

  // Cut between rows c and c+1: s -> a below, the edge a-b, b -> t above.
  Path split(const RectGrid& r, Vertex s, Vertex t, long long bound) {
    const bool swapped = s.y > t.y;
    if (swapped) std::swap(s, t);
    const int mid = r.oy + r.n / 2 - 1;
    std::vector<int> cuts;
    for (int c = s.y; c < t.y; ++c) {
      const int below = c - r.oy + 1;
      if (r.m % 2 != 0 && below % 2 != 0) continue;
      cuts.push_back(c);
    }
    std::stable_sort(cuts.begin(), cuts.end(),
                     [mid](int a, int b) { return std::abs(a - mid) < std::abs(b - mid); });
    if (cuts.empty())
      for (int c = s.y; c < t.y; ++c) cuts.push_back(c);

    const int cx = r.ox + r.m / 2;
    Path best;
    int tries = 0;
    for (std::size_t ci = 0; ci < cuts.size() && ci < 2; ++ci) {
      const int c = cuts[ci];
      RectGrid low{r.m, c - r.oy + 1, r.ox, r.oy};
      RectGrid high{r.m, r.max_y() - c, r.ox, c + 1};
      std::vector<int> xs;
      for (int x = r.ox; x <= r.max_x(); ++x) xs.push_back(x);
      std::stable_sort(xs.begin(), xs.end(),
                       [cx](int a, int b) { return std::abs(a - cx) < std::abs(b - cx); });
      for (int x : xs) {
        Vertex a{x, c}, b{x, c + 1};
        if (a == s || b == t) continue;
        if (low.size() % 2 == 0 && color(a) == color(s)) continue;
        Path lower = solve(low, s, a);
        Path upper = solve(high, b, t);
        lower.vertices.insert(lower.vertices.end(), upper.vertices.begin(), upper.vertices.end());
        const bool done = static_cast<long long>(lower.size()) == bound;
        if (lower.size() > best.size()) best = std::move(lower);
        if (done || ++tries >= 4) break;
      }
      if (static_cast<long long>(best.size()) == bound || tries >= 4) break;
    }
    if (swapped) std::reverse(best.vertices.begin(), best.vertices.end());
    return best;
  }
};

}  // namespace

long long longest_path_upper_bound(const RectGrid& r, Vertex s, Vertex t) {
  const long long total = r.size();
  if (total % 2 == 0) return color(s) != color(t) ? total : total - 1;
  const Color major = color(Vertex{r.ox, r.oy});
  const int minors = (color(s) != major) + (color(t) != major);
  return total - minors;
}

Path longest_path(const RectGrid& r, Vertex s, Vertex t) {
  if (!r.contains(s) || !r.contains(t))
    throw GridError(ErrorKind::VertexOutOfGrid, "out-of-grid", "endpoint outside the grid");
  if (s == t) throw GridError(ErrorKind::SameVertex, "same-vertex", "s and t coincide");
  return Builder{}.solve(r, s, t);
}

long long longest_path_len(const RectGrid& r, Vertex s, Vertex t) {
  using Key = std::tuple<int, int, int, int, int, int, int, int>;
  static std::mutex mu;
  static std::map<Key, long long> memo;
  const Key key{r.m, r.n, r.ox, r.oy, s.x, s.y, t.x, t.y};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const auto len = static_cast<long long>(longest_path(r, s, t).size());
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, len);
  return len;
}

}  // namespace gridk
