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

#include <doctest.h>

#include <set>

#include "gridk/errors.hpp"
#include "gridk/grid3d.hpp"
#include "gridk/oracle.hpp"

using namespace gridk;

static_assert(map_F({1, 1, 1}, 2) == Vertex{1, 1});
static_assert(map_F({1, 2, 2}, 2) == Vertex{1, 3});
static_assert(map_F({3, 1, 3}, 2) == Vertex{3, 5});

TEST_CASE("map_F is a bijection that keeps edges") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int o = 1; o <= 4; ++o) {
        const Grid3D g{m, n, o};
        const RectGrid flat{m, n * o};
        std::set<Vertex> image;
        std::vector<Vertex3> all;
        for (int x = 1; x <= m; ++x)
          for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= o; ++z) all.push_back({x, y, z});
        for (const auto& v : all) {
          const Vertex w = map_F(v, n);
          CHECK(flat.contains(w));
          CHECK(map_F_inv(w, n) == v);
          image.insert(w);
        }
        CHECK(static_cast<long long>(image.size()) == flat.size());
        for (const auto& a : all)
          for (const auto& b : all)
            if (adjacent(map_F(a, n), map_F(b, n))) CHECK(adjacent(a, b));
        (void)g;
      }
}

TEST_CASE("3d cycle examples") {
  const Grid3D cube{2, 2, 2};
  Cycle3 c8 = find_cycle_3d(cube, 8);
  CHECK(c8.size() == 8);
  CHECK(validate_cycle3(c8.vertices, cube).ok);
  Cycle3 c6 = find_cycle_3d(cube, 6);
  CHECK(c6.size() == 6);
  CHECK(validate_cycle3(c6.vertices, cube).ok);
  CHECK_FALSE(cycle_exists_3d(Grid3D{1, 1, 5}, 4));
  CHECK_THROWS_AS(find_cycle_3d(Grid3D{1, 1, 5}, 4), GridError);
  CHECK_FALSE(cycle_exists_3d(cube, 5));
  CHECK_FALSE(cycle_exists_3d(cube, 10));
}

TEST_CASE("3d path examples") {
  const Grid3D cube{2, 2, 2};
  Path3 p4 = find_path_3d(cube, {1, 1, 1}, {2, 2, 2}, 4);
  CHECK(p4.size() == 4);
  CHECK(validate_path3(p4.vertices, cube).ok);
  Path3 p8 = find_path_3d(cube, {1, 1, 1}, {2, 2, 2}, 8);
  CHECK(p8.size() == 8);
  CHECK(validate_path3(p8.vertices, cube).ok);
  CHECK(p8.vertices.front() == Vertex3{1, 1, 1});
  CHECK(p8.vertices.back() == Vertex3{2, 2, 2});
  try {
    find_path_3d(cube, {1, 1, 1}, {2, 2, 2}, 5);
    FAIL("expected an error");
  } catch (const GridError& e) {
    CHECK(e.reason() == "parity");
  }
}

TEST_CASE("3d existence matches the oracle on small boxes") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int o = 1; o <= 3; ++o) {
        if (m * n * o > 12) continue;
        const Grid3D g{m, n, o};
        const auto lg = oracle::LatticeGraph::box(m, n, o);
        const auto cyc = oracle::cycle_length_mask(lg);
        for (int k = 3; k <= m * n * o + 1; ++k) {
          const bool want = (cyc >> k) & 1;
          CHECK(cycle_exists_3d(g, k) == want);
          if (want) CHECK(validate_cycle3(find_cycle_3d(g, k).vertices, g).ok);
        }
        for (int x = 1; x <= m; ++x)
          for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= o; ++z) {
              const Vertex3 s{x, y, z};
              const auto table = oracle::path_length_table(lg, lg.index_of(s));
              for (int x2 = 1; x2 <= m; ++x2)
                for (int y2 = 1; y2 <= n; ++y2)
                  for (int z2 = 1; z2 <= o; ++z2) {
                    const Vertex3 t{x2, y2, z2};
                    if (s == t) continue;
                    const auto mask = table[static_cast<std::size_t>(lg.index_of(t))];
                    for (int k = 1; k <= m * n * o; ++k) {
                      const bool want = (mask >> k) & 1;
                      CHECK(path_exists_3d(g, s, t, k) == want);
                      if (want) {
                        Path3 p = find_path_3d(g, s, t, k);
                        CHECK(p.size() == static_cast<std::size_t>(k));
                        CHECK(validate_path3(p.vertices, g).ok);
                      }
                    }
                  }
            }
      }
}

TEST_CASE("3d validators reject bad walks") {
  const Grid3D cube{2, 2, 2};
  CHECK_FALSE(validate_path3({{1, 1, 1}, {2, 2, 1}}, cube).ok);
  CHECK_FALSE(validate_path3({{1, 1, 1}, {1, 1, 2}, {1, 1, 1}}, cube).ok);
  CHECK_FALSE(validate_path3({{2, 2, 2}, {2, 2, 3}}, cube).ok);
  CHECK_FALSE(validate_cycle3({{1, 1, 1}, {2, 1, 1}, {2, 2, 1}}, cube).ok);
}
