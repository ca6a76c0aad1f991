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

#include <functional>
#include <random>

#include "gridk/errors.hpp"
#include "gridk/frontier_dp.hpp"
#include "gridk/oracle.hpp"
#include "gridk/paths.hpp"

using namespace gridk;

namespace {

std::string reason_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GridError& e) {
    return e.reason();
  }
  return "none";
}

// Every simple path of r with at least two vertices, in both directions.
void for_each_path(const RectGrid& r, const std::function<void(const Path&)>& visit) {
  const Vertex dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  Path walk;
  VertexSet used;
  std::function<void()> dfs = [&]() {
    if (walk.size() >= 2) visit(walk);
    for (const auto d : dirs) {
      const Vertex nx = walk.back() + d;
      if (!r.contains(nx) || used.count(nx)) continue;
      used.insert(nx);
      walk.vertices.push_back(nx);
      dfs();
      walk.vertices.pop_back();
      used.erase(nx);
    }
  };
  for (int x = r.ox; x <= r.max_x(); ++x)
    for (int y = r.oy; y <= r.max_y(); ++y) {
      walk.vertices = {{x, y}};
      used = {{x, y}};
      dfs();
    }
}

// A U-shaped cave blocked by a smaller cave whose inside holds t.
Path nested_blocking() {
  Path p;
  for (int y = 7; y >= 1; --y) p.vertices.push_back({1, y});
  for (int x = 2; x <= 7; ++x) p.vertices.push_back({x, 1});
  for (int y = 2; y <= 7; ++y) p.vertices.push_back({7, y});
  p.vertices.push_back({6, 7});
  for (int y = 6; y >= 2; --y) p.vertices.push_back({6, y});
  for (int x = 5; x >= 3; --x) p.vertices.push_back({x, 2});
  p.vertices.insert(p.vertices.end(), {{3, 3}, {3, 4}, {4, 4}, {4, 3}});
  return p;
}

}  // namespace

TEST_CASE("contractible cave search on R(3,3) paths of length 7") {
  const RectGrid r{3, 3};
  int seen = 0;
  for_each_path(r, [&](const Path& p) {
    if (p.size() != 7 || p.front() != Vertex{1, 1} || p.back() != Vertex{3, 3}) return;
    ++seen;
    const Cave c = find_contractible_cave(p);
    CHECK(is_contractible(c, p));
    Path q = contract(p, c);
    CHECK(q.size() == 5);
    CHECK(validate_path(q, r).ok);
  });
  CHECK(seen > 0);
}

TEST_CASE("monotone paths have no cave to contract") {
  CHECK_THROWS_AS(find_contractible_cave(Path{{{1, 1}, {2, 1}, {2, 2}}}), GridError);
  CHECK(reason_of([] { find_contractible_cave(Path{{{1, 1}, {2, 1}}}); }) == "monotone");
}

TEST_CASE("nested blocking ends in the cycle closed at t") {
  const RectGrid r{7, 7};
  const Path p = nested_blocking();
  REQUIRE(validate_path(p, r).ok);
  REQUIRE_FALSE(is_contractible(*next_cave(p), p));
  CaveSearchStats stats;
  const Cave c = find_contractible_cave(p, &stats);
  CHECK(stats.cycle_q == 1);
  CHECK(stats.fallbacks == 0);
  CHECK(p.vertices[c.start] == Vertex{3, 3});
  CHECK(p.vertices[c.end] == Vertex{4, 3});
  CHECK(is_contractible(c, p));
  CHECK(validate_path(contract(p, c), r).ok);

  // Same configuration walked from the other end.
  Path rev{{p.vertices.rbegin(), p.vertices.rend()}};
  const Cave back = find_contractible_cave(rev);
  CHECK(is_contractible(back, rev));
}

TEST_CASE("every non-monotone path on grids up to 16 vertices has a contractible cave") {
  CaveSearchStats stats;
  long long paths = 0;
  for (int m = 1; m <= 16; ++m)
    for (int n = 1; m * n <= 16; ++n)
      for_each_path(RectGrid{m, n}, [&](const Path& p) {
        if (is_monotone(p)) return;
        ++paths;
        const Cave c = find_contractible_cave(p, &stats);
        if (!is_contractible(c, p)) FAIL("returned cave is blocked");
      });
  CHECK(paths > 10000);
  CHECK(stats.fallbacks == 0);
}

TEST_CASE("random walks on larger grids have a contractible cave") {
  std::mt19937 rng(7);
  const Vertex dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  CaveSearchStats stats;
  int tried = 0;
  while (tried < 200) {
    const int m = 5 + static_cast<int>(rng() % 8), n = 5 + static_cast<int>(rng() % 8);
    const RectGrid r{m, n};
    Path p{{{1 + static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % n)}}};
    VertexSet used{p.front()};
    const std::size_t want = 4 + rng() % (r.size() / 2);
    while (p.size() < want) {
      std::vector<Vertex> next;
      for (const auto d : dirs)
        if (r.contains(p.back() + d) && !used.count(p.back() + d)) next.push_back(p.back() + d);
      if (next.empty()) break;
      p.vertices.push_back(next[rng() % next.size()]);
      used.insert(p.back());
    }
    if (is_monotone(p)) continue;
    ++tried;
    const Cave c = find_contractible_cave(p, &stats);
    CHECK(is_contractible(c, p));
    CHECK(validate_path(contract(p, c), r).ok);
  }
  CHECK(stats.fallbacks == 0);
}

TEST_CASE("shrink_path") {
  const RectGrid r{3, 3};
  Path ham = longest_path(r, {1, 1}, {3, 3});
  REQUIRE(ham.size() == 9);
  CHECK(shrink_path(ham, r, 9) == ham);
  Path five = shrink_path(ham, r, 5);
  CHECK(five.size() == 5);
  CHECK(validate_path(five, r).ok);
  CHECK(five.front() == Vertex{1, 1});
  CHECK(five.back() == Vertex{3, 3});
  CHECK(reason_of([&] { shrink_path(ham, r, 4); }) == "parity");
  CHECK(reason_of([&] { shrink_path(ham, r, 3); }) == "range");
  Path diag{{{1, 1}, {2, 2}}};
  CHECK_THROWS_AS(shrink_path(diag, r, 2), GridError);
}

TEST_CASE("every contraction step keeps the path valid") {
  std::mt19937 rng(11);
  for (int it = 0; it < 60; ++it) {
    const int m = 3 + static_cast<int>(rng() % 14), n = 3 + static_cast<int>(rng() % 14);
    const RectGrid r{m, n};
    const Vertex s{1 + static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % n)};
    const Vertex t{1 + static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % n)};
    if (s == t) continue;
    Path ham = longest_path(r, s, t);
    const long long l = shortest_len(s, t);
    const long long k = l + 2 * static_cast<long long>(rng() % ((ham.size() - l) / 2 + 1));
    int steps = 0, bad = 0;
    auto obs = [&](const Path& before, const Cave& c, const Path& after) {
      ++steps;
      if (!is_contractible(c, before)) ++bad;
      if (after.size() + 2 != before.size()) ++bad;
      if (after.front() != s || after.back() != t) ++bad;
      if (!validate_path(after, r).ok) ++bad;
    };
    Path out = shrink_path(ham, r, k, obs);
    CHECK(bad == 0);
    CHECK(steps == static_cast<int>((ham.size() - k) / 2));
    CHECK(static_cast<long long>(out.size()) == k);
  }
}

TEST_CASE("longest path examples") {
  CHECK(longest_path(RectGrid{2, 2}, {1, 1}, {2, 2}).size() == 3);
  CHECK(longest_path(RectGrid{3, 3}, {1, 1}, {3, 3}).size() == 9);
  CHECK(longest_path(RectGrid{3, 3}, {1, 1}, {2, 1}).size() == 8);
  CHECK(reason_of([] { longest_path(RectGrid{3, 3}, {1, 1}, {1, 1}); }) == "same-vertex");
  CHECK_THROWS_AS(longest_path(RectGrid{3, 3}, {1, 1}, {4, 1}), GridError);
}

TEST_CASE("longest path matches the oracle on grids up to 16 vertices") {
  for (int m = 1; m <= 16; ++m)
    for (int n = 1; m * n <= 16; ++n) {
      const RectGrid r{m, n};
      const auto g = oracle::LatticeGraph::rect(m, n);
      for (int i = 0; i < m * n; ++i)
        for (int j = 0; j < m * n; ++j) {
          if (i == j) continue;
          const Vertex s{1 + i / n, 1 + i % n}, t{1 + j / n, 1 + j % n};
          Path p = longest_path(r, s, t);
          CHECK(validate_path(p, r).ok);
          CHECK(static_cast<int>(p.size()) ==
                oracle::longest_path_len(g, g.index_of(s), g.index_of(t)));
        }
    }
}

TEST_CASE("wide grids reach the color bound") {
  std::mt19937 rng(31);
  for (int it = 0; it < 40; ++it) {
    const int m = 9 + static_cast<int>(rng() % 30), n = 9 + static_cast<int>(rng() % 30);
    const RectGrid r{m, n};
    const Vertex s{1 + static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % n)};
    const Vertex t{1 + static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % n)};
    if (s == t) continue;
    Path p = longest_path(r, s, t);
    CHECK(validate_path(p, r).ok);
    CHECK(p.front() == s);
    CHECK(p.back() == t);
    CHECK(static_cast<long long>(p.size()) == longest_path_upper_bound(r, s, t));
    CHECK(static_cast<long long>(p.size()) >= r.size() - 2);
  }
}

TEST_CASE("path existence examples") {
  CHECK(path_exists(RectGrid{2, 2}, {1, 1}, {2, 2}, 3));
  CHECK_FALSE(path_exists(RectGrid{2, 2}, {1, 1}, {2, 2}, 4));
  CHECK(path_exists(RectGrid{3, 3}, {1, 1}, {3, 3}, 7));
  CHECK_FALSE(path_exists(RectGrid{3, 3}, {1, 1}, {2, 1}, 9));
  CHECK(path_exists(RectGrid{3, 3}, {1, 1}, {2, 1}, 8));
  CHECK_THROWS_AS(path_exists(RectGrid{3, 3}, {2, 2}, {2, 2}, 1), GridError);
  CHECK(longest_path_len(RectGrid{3, 3}, {1, 1}, {2, 1}) == 8);
  CHECK(longest_path_len(RectGrid{3, 3}, {1, 1}, {2, 1}) == 8);
}

TEST_CASE("initial path for k") {
  const RectGrid r33{3, 3};
  Path p = initial_path_for_k(r33, {1, 1}, {3, 3}, 7);
  CHECK(p.size() == 9);
  CHECK(validate_path(p, r33).ok);

  const RectGrid band{100, 2};
  // 95 has the wrong parity for (1,1)-(90,1); 96 is the nearest valid length
  CHECK(reason_of([&] { initial_path_for_k(band, {1, 1}, {90, 1}, 95); }) == "parity");
  Path q = initial_path_for_k(band, {1, 1}, {90, 1}, 96);
  CHECK(validate_path(q, band).ok);
  CHECK(q.size() >= 96);
  CHECK((q.size() - 96) % 2 == 0);
  CHECK(reason_of([&] { initial_path_for_k(r33, {1, 1}, {3, 3}, 3); }) == "range");

  // Far endpoints: a window at s plus a straight tail.
  const RectGrid big{3000, 3000};
  Path far = initial_path_for_k(big, {10, 10}, {1500, 10}, 2001);
  CHECK(validate_path(far, big).ok);
  CHECK(far.size() >= 2001);
  CHECK(far.size() <= 2 * 2001);
}

TEST_CASE("find_path examples") {
  Path p = find_path(RectGrid{2, 2}, {1, 1}, {2, 2}, 3);
  CHECK(p.size() == 3);
  CHECK(validate_path(p, RectGrid{2, 2}).ok);
  Path q = find_path(RectGrid{5, 5}, {2, 2}, {4, 3}, 12);
  CHECK(q.size() == 12);
  CHECK(validate_path(q, RectGrid{5, 5}).ok);
  CHECK(q.front() == Vertex{2, 2});
  CHECK(q.back() == Vertex{4, 3});

  try {
    find_path(RectGrid{5, 5}, {1, 1}, {5, 5}, 10);
    FAIL("expected an error");
  } catch (const GridError& e) {
    CHECK(e.kind() == ErrorKind::NoSuchPath);
    CHECK(e.reason() == "parity");
    CHECK(e.shortest == 9);
  }
  CHECK(reason_of([] { find_path(RectGrid{5, 5}, {1, 1}, {1, 1}, 1); }) == "same-vertex");
  try {
    find_path(RectGrid{3, 3}, {1, 1}, {2, 1}, 10);
    FAIL("expected an error");
  } catch (const GridError& e) {
    CHECK(e.reason() == "range");
    CHECK(e.longest == 8);
  }
}

TEST_CASE("find_path is deterministic") {
  const RectGrid r{12, 9};
  CHECK(find_path(r, {3, 4}, {9, 2}, 41) == find_path(r, {3, 4}, {9, 2}, 41));
}
