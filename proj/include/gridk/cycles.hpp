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

// Cycles of a prescribed length in rectangular and solid grid graphs.
// Lengths are vertex counts (a k-cycle has k vertices and k edges).

#include <cstddef>
#include <functional>
#include <vector>

#include "gridk/grid.hpp"

namespace gridk {

// An even reduction i with 0 <= i <= |C| - 4. Throws BudgetInvalid.
class ShrinkBudget {
 public:
  ShrinkBudget(long long amount, std::size_t cycle_length);
  long long value() const { return amount_; }

 private:
  long long amount_;
};

// A longest cycle of r: m*n vertices when m*n is even, m*n - 1 otherwise.
// Throws NoCycle when m == 1 or n == 1.
Cycle longest_cycle(const RectGrid& r);

// m, n > 1, k even and 4 <= k <= m*n.
bool cycle_exists(const RectGrid& r, long long k);

// Corner subgrid of size O(k) that still holds a k-cycle. Throws NoCycle.
RectGrid subgrid_for_k(const RectGrid& r, long long k);

struct ShrinkEvent {
  enum class Kind { Contract, Splice, Descend };
  Kind kind = Kind::Contract;
  std::size_t length_before = 0;
  std::size_t length_after = 0;
  long long budget_before = 0;
  long long budget_after = 0;
  Edge kept{};                 // edge the active cycle must retain
  std::vector<Vertex> active;  // active cycle after the step
};
using ShrinkObserver = std::function<void(const ShrinkEvent&)>;

struct ShrinkStats {
  std::size_t contractions = 0;
  std::size_t splices = 0;
  std::size_t descents = 0;
  std::size_t scan_steps = 0;
};

// Shortens `c` by `budget` vertices keeping edge `e`. The input must be a
// cycle of a solid grid graph. Throws EdgeNotInCycle / BudgetInvalid.
Cycle shrink_cycle(const Cycle& c, Edge e, long long budget, const ShrinkObserver& observer = {},
                   ShrinkStats* stats = nullptr);
Cycle shrink_cycle(const Cycle& c, Edge e, ShrinkBudget budget);

// A k-cycle inside r in O(k) time. Throws NoSuchCycle whose reason names the
// failed condition: "dimensions", "parity" or "range".
Cycle find_cycle(const RectGrid& r, long long k);

// A k-cycle of a solid grid graph g given a Hamiltonian cycle h of g.
// Throws NotSolid, NotHamiltonian or NoSuchCycle.
Cycle shrink_cycle_solid(const SolidGrid& g, const Cycle& h, long long k);

}  // namespace gridk
