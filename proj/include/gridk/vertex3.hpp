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

#include <compare>
#include <string>

namespace gridk {

struct Vertex3 {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr bool operator==(const Vertex3&, const Vertex3&) = default;
  friend constexpr auto operator<=>(const Vertex3&, const Vertex3&) = default;
};

constexpr bool adjacent(const Vertex3& a, const Vertex3& b) {
  int dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz == 1;
}

constexpr long long shortest_len(const Vertex3& s, const Vertex3& t) {
  auto d = [](int a, int b) { return static_cast<long long>(a > b ? a - b : b - a); };
  return d(s.x, t.x) + d(s.y, t.y) + d(s.z, t.z) + 1;
}

inline std::string to_string(const Vertex3& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," + std::to_string(v.z) + ")";
}

}  // namespace gridk
