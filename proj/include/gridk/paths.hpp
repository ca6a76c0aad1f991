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

// s-t paths of a prescribed length in rectangular grid graphs.

#include <cstddef>
#include <functional>

#include "gridk/caves.hpp"
#include "gridk/grid.hpp"

namespace gridk {

// Color bound on the vertex count of an s-t path in r: |r| less the
// vertices parity forces out. Thin grids can fall short of it.
long long longest_path_upper_bound(const RectGrid& r, Vertex s, Vertex t);

// A longest s-t path of r. Exact when min(m, n) <= kDpMaxHeight; wider grids
// are split into narrow pieces and reach the color bound on all inputs
// exercised by the tests. Throws SameVertex / VertexOutOfGrid.
Path longest_path(const RectGrid& r, Vertex s, Vertex t);

// |longest_path(r, s, t)|, memoized per (r, s, t). Thread-safe.
long long longest_path_len(const RectGrid& r, Vertex s, Vertex t);

// l <= k <= L and k = l (mod 2). Throws SameVertex / VertexOutOfGrid.
bool path_exists(const RectGrid& r, Vertex s, Vertex t, long long k);

struct CaveSearchStats {
  std::size_t calls = 0;
  std::size_t shortcuts = 0;      // three-edge shortcut taken
  std::size_t chain_steps = 0;    // blocking caves visited
  std::size_t cycle_q = 0;        // answered from the cycle closed at t
  std::size_t reversals = 0;      // path direction flipped
  std::size_t fallbacks = 0;      // linear scan used; expected to stay 0
};

// A contractible cave of a non-monotone path, found by following the chain
// of blocking caves from the cave nearest s. Throws PathIsMonotone.
Cave find_contractible_cave(const Path& p, CaveSearchStats* stats = nullptr);

using PathShrinkObserver =
    std::function<void(const Path& before, const Cave& cave, const Path& after)>;

// Shortens p to exactly k vertices by repeated cave contraction.
// Throws ParityMismatch / BelowShortest.
Path shrink_path(const Path& p, const RectGrid& r, long long k,
                 const PathShrinkObserver& observer = {}, CaveSearchStats* stats = nullptr);

// A valid s-t path of r with |P| >= k, |P| - k even and |P| in O(k).
// Throws NoSuchPath.
Path initial_path_for_k(const RectGrid& r, Vertex s, Vertex t, long long k);

// A k-vertex s-t path of r. Throws NoSuchPath whose reason is one of
// "same-vertex", "parity" or "range" (with shortest/longest filled in).
Path find_path(const RectGrid& r, Vertex s, Vertex t, long long k);

}  // namespace gridk
