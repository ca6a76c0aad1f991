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

// Exact longest s-t paths on grids with a short side, by a plug (frontier)
// dynamic program over the cells in column-major order.

#include "gridk/grid.hpp"

namespace gridk {

// Largest short side accepted by longest_path_dp.
inline constexpr int kDpMaxHeight = 8;

// A longest simple s-t path of r. Requires s != t inside r and
// min(m, n) <= kDpMaxHeight; throws InvalidInput otherwise.
Path longest_path_dp(const RectGrid& r, Vertex s, Vertex t);

}  // namespace gridk
