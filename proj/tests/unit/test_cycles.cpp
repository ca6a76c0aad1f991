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

#include <random>

#include "fixtures.hpp"
#include "gridk/cycles.hpp"
#include "gridk/errors.hpp"
#include "gridk/oracle.hpp"

using namespace gridk;

namespace {

bool has_edge(const std::vector<Vertex>& ring, Edge e) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = ring[i], b = ring[(i + 1) % n];
    if ((a == e.a && b == e.b) || (a == e.b && b == e.a)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("longest cycles") {
  CHECK(longest_cycle(RectGrid{2, 2}).size() == 4);
  Cycle c33 = longest_cycle(RectGrid{3, 3});
  CHECK(c33.size() == 8);
  CHECK(validate_cycle(c33, RectGrid{3, 3}).ok);
  CHECK_THROWS_AS(longest_cycle(RectGrid{1, 5}), GridError);
  for (int m = 2; m <= 9; ++m)
    for (int n = 2; n <= 9; ++n) {
      const RectGrid r{m, n};
      Cycle c = longest_cycle(r);
      CHECK(validate_cycle(c, r).ok);
      CHECK(static_cast<long long>(c.size()) == (r.size() % 2 == 0 ? r.size() : r.size() - 1));
      CHECK(c == canonical_cycle(c.vertices));
    }
  // Odd by odd leaves out the corner (1,1).
  Cycle c55 = longest_cycle(RectGrid{5, 5});
  CHECK(std::find(c55.vertices.begin(), c55.vertices.end(), Vertex{1, 1}) == c55.vertices.end());
  // Offset grids are translated copies.
  Cycle shifted = longest_cycle(RectGrid{4, 3, 10, -2});
  CHECK(validate_cycle(shifted, RectGrid{4, 3, 10, -2}).ok);
}

TEST_CASE("cycle existence") {
  CHECK(cycle_exists(RectGrid{4, 5}, 14));
  CHECK_FALSE(cycle_exists(RectGrid{4, 5}, 15));
  CHECK_FALSE(cycle_exists(RectGrid{3, 3}, 9));
  CHECK_FALSE(cycle_exists(RectGrid{1, 8}, 4));
  CHECK_FALSE(cycle_exists(RectGrid{2, 2}, 2));
}

TEST_CASE("shrink budget") {
  Cycle c8 = longest_cycle(RectGrid{2, 4});
  CHECK_THROWS_AS(ShrinkBudget(6, c8.size()), GridError);
  CHECK_THROWS_AS(ShrinkBudget(3, c8.size()), GridError);
  CHECK(ShrinkBudget(4, c8.size()).value() == 4);
  Edge e{c8.vertices[0], c8.vertices[1]};
  CHECK(shrink_cycle(c8, e, 0) == c8);
  CHECK_THROWS_AS(shrink_cycle(c8, e, 6), GridError);
  CHECK_THROWS_AS(shrink_cycle(c8, Edge{{1, 1}, {2, 2}}, 2), GridError);
}

TEST_CASE("shrink keeps the chosen edge") {
  const RectGrid r{4, 4};
  Cycle c = longest_cycle(r);
  const Edge e{c.vertices[0], c.vertices[1]};
  Cycle out = shrink_cycle(c, e, ShrinkBudget(4, c.size()));
  CHECK(out.size() == 12);
  CHECK(validate_cycle(out, r).ok);
  CHECK(has_edge(out.vertices, e));
}

TEST_CASE("subgrid for k") {
  CHECK(subgrid_for_k(RectGrid{100, 100}, 8) == RectGrid{3, 3, 1, 1});
  CHECK(subgrid_for_k(RectGrid{100, 2}, 8) == RectGrid{5, 2, 1, 1});
  CHECK(subgrid_for_k(RectGrid{2, 100}, 8) == RectGrid{2, 5, 1, 1});
  CHECK(subgrid_for_k(RectGrid{3, 3}, 8) == RectGrid{3, 3, 1, 1});
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n)
      for (long long k = 4; k <= m * n; k += 2) {
        const RectGrid r{m, n};
        const RectGrid sub = subgrid_for_k(r, k);
        CHECK(sub.m <= r.m);
        CHECK(sub.n <= r.n);
        CHECK(longest_cycle(sub).size() >= static_cast<std::size_t>(k));
      }
}

TEST_CASE("find_cycle examples") {
  CHECK(find_cycle(RectGrid{2, 2}, 4).vertices == std::vector<Vertex>{{1, 1}, {1, 2}, {2, 2}, {2, 1}});
  Cycle c = find_cycle(RectGrid{6, 6}, 10);
  CHECK(c.size() == 10);
  CHECK(validate_cycle(c, RectGrid{6, 6}).ok);
  CHECK(oracle::exists_cycle(oracle::LatticeGraph::rect(6, 6), 10, {true, 36}));

  auto reason = [](RectGrid r, long long k) {
    try {
      find_cycle(r, k);
    } catch (const GridError& e) {
      return e.reason();
    }
    return std::string("none");
  };
  CHECK(reason(RectGrid{5, 3}, 16) == "range");
  CHECK(reason(RectGrid{4, 5}, 15) == "parity");
  CHECK(reason(RectGrid{1, 5}, 4) == "dimensions");
}

TEST_CASE("find_cycle output lies in the corner subgrid") {
  const RectGrid r{200, 150};
  for (long long k : {4LL, 10LL, 98LL, 1000LL, 5002LL}) {
    Cycle c = find_cycle(r, k);
    const RectGrid sub = subgrid_for_k(r, k);
    CHECK(static_cast<long long>(c.size()) == k);
    for (const auto& v : c.vertices) CHECK(sub.contains(v));
  }
}

TEST_CASE("each shrink step shortens, keeps e and never grows the interior") {
  std::mt19937 rng(23);
  ShrinkStats stats;
  for (int it = 0; it < 150; ++it) {
    const int m = 2 + static_cast<int>(rng() % 14), n = 2 + static_cast<int>(rng() % 14);
    const RectGrid r{m, n};
    Cycle c = longest_cycle(r);
    const std::size_t at = rng() % c.size();
    const Edge e{c.vertices[at], c.vertices[(at + 1) % c.size()]};
    const long long budget = 2 * static_cast<long long>(rng() % ((c.size() - 4) / 2 + 1));
    long long interior = testing::interior_points(c.vertices);
    int violations = 0;
    Cycle out = shrink_cycle(
        c, e, budget,
        [&](const ShrinkEvent& ev) {
          if (!(ev.budget_after < ev.budget_before || ev.length_after < ev.length_before)) ++violations;
          if (ev.kind == ShrinkEvent::Kind::Contract &&
              (ev.length_after + 2 != ev.length_before || ev.budget_after + 2 != ev.budget_before))
            ++violations;
          if (ev.active.size() != ev.length_after) ++violations;
          if (!validate_cycle(ev.active, [&r](Vertex v) { return r.contains(v); }).ok) ++violations;
          if (!has_edge(ev.active, ev.kept)) ++violations;
          const long long now = testing::interior_points(ev.active);
          if (now > interior) ++violations;
          interior = now;
        },
        &stats);
    CHECK(violations == 0);
    CHECK(static_cast<long long>(out.size()) == static_cast<long long>(c.size()) - budget);
    CHECK(has_edge(out.vertices, e));
    CHECK(validate_cycle(out, r).ok);
  }
  CHECK(stats.contractions > 0);
  CHECK(stats.splices > 0);
  CHECK(stats.descents > 0);
}

TEST_CASE("solid grid shrink") {
  const SolidGrid g = SolidGrid::from_rect(RectGrid{4, 4});
  Cycle h = longest_cycle(RectGrid{4, 4});
  Cycle c8 = shrink_cycle_solid(g, h, 8);
  CHECK(c8.size() == 8);
  CHECK(validate_cycle(c8, g).ok);
  CHECK_THROWS_AS(shrink_cycle_solid(g, h, 7), GridError);

  auto stairs = testing::make_staircase({6, 6, 4, 4, 2});
  REQUIRE(validate_cycle(stairs.hamiltonian, stairs.grid).ok);
  REQUIRE(stairs.hamiltonian.size() == stairs.grid.size());
  for (long long k = 4; k <= static_cast<long long>(stairs.grid.size()); k += 2) {
    Cycle c = shrink_cycle_solid(stairs.grid, stairs.hamiltonian, k);
    CHECK(static_cast<long long>(c.size()) == k);
    CHECK(validate_cycle(c, stairs.grid).ok);
  }

  std::vector<Vertex> holed;
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y)
      if (x != 2 || y != 2) holed.push_back({x, y});
  const SolidGrid ring(holed);
  const Cycle around = canonical_cycle({{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}});
  CHECK_THROWS_AS(shrink_cycle_solid(ring, around, 4), GridError);
  CHECK_THROWS_AS(shrink_cycle_solid(g, find_cycle(RectGrid{4, 4}, 8), 4), GridError);
}
