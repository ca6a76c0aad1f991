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

// Exhaustive ground truth for small grid graphs. Written directly against the
// definitions (simple paths, simple cycles, caves) and deliberately shares no
// code with the constructive modules.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gridk/grid.hpp"
#include "gridk/vertex3.hpp"

namespace gridk::oracle {

// Default instance-size cap; GRIDKPATH_ORACLE_BOUND overrides it.
std::size_t default_bound();

// Explicit lattice graph over an arbitrary 2D or 3D vertex set.
class LatticeGraph {
 public:
  static LatticeGraph from_2d(std::span<const Vertex> vertices);
  static LatticeGraph from_3d(std::span<const Vertex3> vertices);
  static LatticeGraph rect(int m, int n);
  static LatticeGraph box(int m, int n, int o);

  std::size_t size() const { return adj_.size(); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  // Index of a vertex, or -1.
  int index_of(Vertex v) const;
  int index_of(Vertex3 v) const;
  // Hop distances from `v` to every node (-1 when unreachable).
  std::vector<int> distances_from(int v) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Vertex3> coords_;  // 2D graphs use z = 0
};

struct Options {
  bool prune = true;
  std::size_t bound = default_bound();
};

// Throws GridError(BoundExceeded) when the graph exceeds `opts.bound`.
bool exists_cycle(const LatticeGraph& g, int k, const Options& opts = {});
bool exists_path(const LatticeGraph& g, int s, int t, int k, const Options& opts = {});
// Vertex count of a longest s-t path (1 when s == t).
int longest_path_len(const LatticeGraph& g, int s, int t, const Options& opts = {});

// Every length reached: bit L of result[v] is set iff a simple path with L
// vertices runs from s to v. Requires size() < 64.
std::vector<std::uint64_t> path_length_table(const LatticeGraph& g, int s,
                                             const Options& opts = {});
// Bit L set iff some simple cycle with L vertices exists. Requires size() < 64.
std::uint64_t cycle_length_mask(const LatticeGraph& g, const Options& opts = {});

struct CaveRecord {
  std::size_t start = 0;  // index of p in the carrier
  std::size_t end = 0;    // index of q in the carrier
  std::vector<Vertex> inside;
  bool contractible = false;
  bool convex = false;  // meaningful only for cycles
};

// Brute-force scan applying the cave definitions literally.
std::vector<CaveRecord> enumerate_caves(std::span<const Vertex> carrier, bool closed);

}  // namespace gridk::oracle
