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

// Shared fixtures for the unit and acceptance suites.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "gridk/grid.hpp"

namespace gridk::testing {

// Staircase polyomino: column x holds rows 1..heights[x-1]; heights are even,
// non-increasing, and the first two are equal.
struct Staircase {
  std::vector<int> heights;
  SolidGrid grid;
  Cycle hamiltonian;
};

// Column 1 is climbed as a spine; row pairs are then swept from the top, the
// upper row rightward and the lower row back to column 2.
inline Staircase make_staircase(std::vector<int> heights) {
  Staircase s;
  s.heights = heights;
  std::vector<Vertex> cells;
  for (std::size_t x = 0; x < heights.size(); ++x)
    for (int y = 1; y <= heights[x]; ++y) cells.push_back({static_cast<int>(x) + 1, y});
  s.grid = SolidGrid(cells);

  const int top = heights[0];
  auto width_at = [&heights](int y) {
    int w = 0;
    while (w < static_cast<int>(heights.size()) && heights[static_cast<std::size_t>(w)] >= y) ++w;
    return w;
  };
  std::vector<Vertex> ring;
  for (int y = 1; y <= top; ++y) ring.push_back({1, y});
  for (int b = top; b >= 2; b -= 2) {
    const int w = width_at(b);
    for (int x = 2; x <= w; ++x) ring.push_back({x, b});
    for (int x = w; x >= 2; --x) ring.push_back({x, b - 1});
  }
  s.hamiltonian = canonical_cycle(std::move(ring));
  return s;
}

// Random staircase with between `min_cells` and `max_cells` cells.
inline Staircase random_staircase(std::mt19937& rng, int max_cells, int min_cells = 0) {
  while (true) {
    const int width = 2 + static_cast<int>(rng() % 19);
    int h = 2 * (1 + static_cast<int>(rng() % 10));
    std::vector<int> heights{h, h};
    int total = 2 * h;
    for (int x = 2; x < width; ++x) {
      if (rng() % 2) h = 2 * (1 + static_cast<int>(rng() % static_cast<unsigned>(h / 2)));
      if (total + h > max_cells) break;
      heights.push_back(h);
      total += h;
    }
    if (total <= max_cells && total >= min_cells) return make_staircase(heights);
  }
}

// Every simple cycle of the grid graph on `cells`, each reported once as a
// vertex ring starting at its smallest vertex.
inline void for_each_cycle(const std::vector<Vertex>& cells,
                           const std::function<void(const std::vector<Vertex>&)>& visit) {
  VertexSet in(cells.begin(), cells.end());
  std::vector<Vertex> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  const Vertex dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const Vertex start : sorted) {
    std::vector<Vertex> walk{start};
    VertexSet used{start};
    std::function<void()> dfs = [&]() {
      const Vertex cur = walk.back();
      for (const auto d : dirs) {
        const Vertex nx = cur + d;
        if (!in.count(nx) || nx < start) continue;
        if (nx == start) {
          // Each cycle is met in both directions; keep one.
          if (walk.size() >= 4 && walk[1] < walk.back()) visit(walk);
          continue;
        }
        if (used.count(nx)) continue;
        used.insert(nx);
        walk.push_back(nx);
        dfs();
        walk.pop_back();
        used.erase(nx);
      }
    };
    dfs();
  }
}

// Lattice points strictly inside a cycle, by Pick's theorem.
inline long long interior_points(const std::vector<Vertex>& ring) {
  const long long area2 = std::llabs(signed_area2(ring));
  return (area2 - static_cast<long long>(ring.size())) / 2 + 1;
}

}  // namespace gridk::testing
