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

// Paths and cycles of a prescribed length in 3D grids R(m, n, o), lifted
// from the 2D grid R'(m, n*o) through a layer-alternating snake bijection.

#include <array>
#include <string>
#include <vector>

#include "gridk/grid.hpp"
#include "gridk/vertex3.hpp"

namespace gridk {

struct Grid3D {
  int m = 1;
  int n = 1;
  int o = 1;

  constexpr bool contains(const Vertex3& v) const {
    return v.x >= 1 && v.x <= m && v.y >= 1 && v.y <= n && v.z >= 1 && v.z <= o;
  }
  constexpr long long size() const { return static_cast<long long>(m) * n * o; }
};

struct Path3 {
  std::vector<Vertex3> vertices;
  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const Path3&, const Path3&) = default;
};

struct Cycle3 {
  std::vector<Vertex3> vertices;
  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const Cycle3&, const Cycle3&) = default;
};

// y' = n(z-1) + y on odd layers, n*z - y + 1 on even ones; x is kept.
constexpr Vertex map_F(const Vertex3& v, int n) {
  return {v.x, v.z % 2 == 1 ? n * (v.z - 1) + v.y : n * v.z - v.y + 1};
}
constexpr Vertex3 map_F_inv(Vertex w, int n) {
  const int z = (w.y - 1) / n + 1;
  const int y = z % 2 == 1 ? w.y - n * (z - 1) : n * z - w.y + 1;
  return {w.x, y, z};
}

// Which input axis (0 = x, 1 = y, 2 = z) plays the x, y and z role of map_F.
using AxisRoles = std::array<int, 3>;

Diagnostic validate_path3(const std::vector<Vertex3>& vs, const Grid3D& g);
Diagnostic validate_cycle3(const std::vector<Vertex3>& vs, const Grid3D& g);

bool cycle_exists_3d(const Grid3D& g, long long k);
// Throws NoSuchCycle.
Cycle3 find_cycle_3d(const Grid3D& g, long long k);

// True iff the layer descent below builds a k-path. Throws SameVertex.
bool path_exists_3d(const Grid3D& g, const Vertex3& s, const Vertex3& t, long long k);
// Walks t down its z column to the first t_j that a (k - j)-path from s in
// R' can reach, then appends t_{j-1}, ..., t_0. The identity roles are tried
// first, then y and z swapped, then the remaining orders.
// Throws NoSuchPath(parity | range | same-vertex).
Path3 find_path_3d(const Grid3D& g, const Vertex3& s, const Vertex3& t, long long k);

}  // namespace gridk
