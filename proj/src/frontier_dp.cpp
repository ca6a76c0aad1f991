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

#include "gridk/frontier_dp.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gridk/errors.hpp"

namespace gridk {

namespace {

// Plug codes on the frontier: 0 none, 1 and 2 the two ends of a fragment
// (bracket pairs), 3 a fragment whose other end is s or t.
using Key = std::uint64_t;

int get(Key k, int i) { return static_cast<int>((k >> (2 * i)) & 3u); }
Key put(Key k, int i, int v) {
  return (k & ~(Key{3} << (2 * i))) | (static_cast<Key>(v) << (2 * i));
}

int partner(Key k, int i, int width) {
  int depth = 0;
  if (get(k, i) == 1) {
    for (int j = i; j < width; ++j) {
      int c = get(k, j);
      if (c == 1) ++depth;
      else if (c == 2 && --depth == 0) return j;
    }
  } else {
    for (int j = i; j >= 0; --j) {
      int c = get(k, j);
      if (c == 2) ++depth;
      else if (c == 1 && --depth == 0) return j;
    }
  }
  return -1;
}

struct Layer {
  std::vector<Key> keys;
  std::vector<int> value;
  std::vector<int> parent;
  std::vector<std::uint8_t> choice;  // bit 0: edge right, bit 1: edge up
  std::unordered_map<Key, int> index;

  void offer(Key k, int v, int from, std::uint8_t ch) {
    auto [it, fresh] = index.try_emplace(k, static_cast<int>(keys.size()));
    if (fresh) {
      keys.push_back(k);
      value.push_back(v);
      parent.push_back(from);
      choice.push_back(ch);
    } else if (v > value[static_cast<std::size_t>(it->second)]) {
      auto at = static_cast<std::size_t>(it->second);
      value[at] = v;
      parent[at] = from;
      choice[at] = ch;
    }
  }
};

}  // namespace

Path longest_path_dp(const RectGrid& r, Vertex s, Vertex t) {
  if (!r.contains(s) || !r.contains(t) || s == t)
    throw GridError(ErrorKind::InvalidInput, "endpoints", "endpoints must be distinct grid vertices");
  const bool transpose = r.m < r.n;
  const int W = transpose ? r.n : r.m;
  const int H = transpose ? r.m : r.n;
  if (H > kDpMaxHeight)
    throw GridError(ErrorKind::InvalidInput, "dimensions", "grid too wide for the frontier dp");

  auto to_local = [&](Vertex v) {
    Vertex d{v.x - r.ox, v.y - r.oy};
    return transpose ? Vertex{d.y, d.x} : d;
  };
  auto to_global = [&](Vertex l) {
    Vertex d = transpose ? Vertex{l.y, l.x} : l;
    return Vertex{d.x + r.ox, d.y + r.oy};
  };
  const Vertex ls = to_local(s), lt = to_local(t);
  const long long cs = static_cast<long long>(ls.x) * H + ls.y;
  const long long ct = static_cast<long long>(lt.x) * H + lt.y;
  const long long last_end = std::max(cs, ct);
  const int width = H + 1;

  // layers[c] holds the states after cell c; parents point into layers[c-1].
  std::vector<Layer> layers;
  layers.reserve(static_cast<std::size_t>(W) * H);
  Layer start;
  start.offer(0, 0, -1, 0);
  const Layer* prev = &start;

  for (int x = 0; x < W; ++x) {
    for (int y = 0; y < H; ++y) {
      const long long c = static_cast<long long>(x) * H + y;
      const bool is_end = c == cs || c == ct;
      const bool can_r = x + 1 < W, can_u = y + 1 < H;
      const bool past_ends = c > last_end;
      Layer cur;
      cur.index.reserve(prev->keys.size() * 2 + 4);
      for (std::size_t i = 0; i < prev->keys.size(); ++i) {
        Key k = prev->keys[i];
        if (y == 0 && x > 0) k <<= 2;
        const int v = prev->value[i];
        const int from = static_cast<int>(i);
        const int D = get(k, y), L = get(k, y + 1);
        const Key base = put(put(k, y, 0), y + 1, 0);

        if (!is_end) {
          if (D == 0 && L == 0) {
            cur.offer(k, v, from, 0);
            if (can_r && can_u && !(past_ends && k == 0)) cur.offer(put(put(k, y, 1), y + 1, 2), v + 1, from, 3);
          } else if (D == 0 || L == 0) {
            const int p = D | L;
            if (can_r) cur.offer(put(base, y, p), v + 1, from, 1);
            if (can_u) cur.offer(put(base, y + 1, p), v + 1, from, 2);
          } else if (D == 3 && L == 3) {
            if (base == 0) cur.offer(0, v + 1, from, 0);
          } else if (D == 3 || L == 3) {
            const int pos = D == 3 ? y + 1 : y;
            cur.offer(put(base, partner(k, pos, width), 3), v + 1, from, 0);
          } else if (D == 1 && L == 1) {
            cur.offer(put(base, partner(k, y + 1, width), 1), v + 1, from, 0);
          } else if (D == 2 && L == 2) {
            cur.offer(put(base, partner(k, y, width), 2), v + 1, from, 0);
          } else if (D == 2 && L == 1) {
            cur.offer(base, v + 1, from, 0);
          }
        } else {
          if (D == 0 && L == 0) {
            if (can_r) cur.offer(put(k, y, 3), v + 1, from, 1);
            if (can_u) cur.offer(put(k, y + 1, 3), v + 1, from, 2);
          } else if (D == 0 || L == 0) {
            const int p = D | L;
            const int pos = D != 0 ? y : y + 1;
            if (p == 3) {
              if (base == 0) cur.offer(0, v + 1, from, 0);
            } else {
              cur.offer(put(base, partner(k, pos, width), 3), v + 1, from, 0);
            }
          }
        }
      }
      cur.index.clear();
      layers.push_back(std::move(cur));
      prev = &layers.back();
    }
  }

  auto found = std::find(prev->keys.begin(), prev->keys.end(), Key{0});
  if (found == prev->keys.end()) throw std::logic_error("frontier dp found no path");

  // Collect the chosen edges by walking the parents back.
  std::vector<std::uint8_t> edges(static_cast<std::size_t>(W) * H, 0);
  int at = static_cast<int>(found - prev->keys.begin());
  for (std::size_t c = layers.size(); c-- > 0;) {
    const Layer& layer = layers[c];
    edges[c] = layer.choice[static_cast<std::size_t>(at)];
    at = layer.parent[static_cast<std::size_t>(at)];
  }

  std::vector<std::vector<int>> adj(edges.size());
  for (int x = 0; x < W; ++x)
    for (int y = 0; y < H; ++y) {
      const int c = x * H + y;
      if (edges[static_cast<std::size_t>(c)] & 1) {
        adj[static_cast<std::size_t>(c)].push_back(c + H);
        adj[static_cast<std::size_t>(c + H)].push_back(c);
      }
      if (edges[static_cast<std::size_t>(c)] & 2) {
        adj[static_cast<std::size_t>(c)].push_back(c + 1);
        adj[static_cast<std::size_t>(c + 1)].push_back(c);
      }
    }
  Path out;
  int prev_cell = -1, cell = static_cast<int>(cs);
  while (true) {
    out.vertices.push_back(to_global(Vertex{cell / H, cell % H}));
    if (cell == static_cast<int>(ct)) break;
    int nxt = -1;
    for (int nb : adj[static_cast<std::size_t>(cell)])
      if (nb != prev_cell) nxt = nb;
    if (nxt < 0) throw std::logic_error("frontier dp produced a broken path");
    prev_cell = cell;
    cell = nxt;
  }
  return out;
}

}  // namespace gridk
