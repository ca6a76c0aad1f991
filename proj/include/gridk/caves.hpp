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

// Caves: minimal sub-walks whose first and last edges point in opposite
// directions. A cave leaves p along `first`, runs straight along `middle`
// for r >= 1 edges and returns along opposite(first) to q = p + r*middle.
// Its inside is the r-1 lattice points strictly between p and q, so a
// three-edge cave (r = 1) has an empty inside and is always contractible.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gridk/grid.hpp"

namespace gridk {

enum class CarrierKind { Path, Cycle };

struct Cave {
  CarrierKind carrier_kind = CarrierKind::Path;
  std::size_t start = 0;  // index of p
  std::size_t end = 0;    // index of q (wraps for cycles)
  EdgeDir first = EdgeDir::Up;
  EdgeDir middle = EdgeDir::Right;
  std::vector<Vertex> inside;

  std::size_t depth() const { return inside.size(); }
  // Edges of the carrier covered by the cave.
  std::size_t edge_count() const { return inside.size() + 3; }
};

// The cave whose p sits exactly at index `p_index`, if any.
std::optional<Cave> cave_at(std::span<const Vertex> carrier, bool closed, std::size_t p_index);

// First cave with p at or after `from`; on cycles the scan wraps once around.
std::optional<Cave> next_cave(const Path& p, std::size_t from = 0);
std::optional<Cave> next_cave(const Cycle& c, std::size_t from = 0);

// Every cave of the carrier, in order of p.
std::vector<Cave> all_caves(std::span<const Vertex> carrier, bool closed);

bool is_contractible(const Cave& c, const VertexSet& occupied);
bool is_contractible(const Cave& c, const Path& p);
bool is_contractible(const Cave& c, const Cycle& cyc);

// Replaces the cave by the straight p-q segment. Throws NotContractible.
Path contract(const Path& p, const Cave& c);
Cycle contract(const Cycle& cyc, const Cave& c);

// Inside of the cave lies in the closed interior of the cycle's polygon.
// Decided from the cave's turn sense against the cycle's orientation.
bool is_convex(const Cave& c, const Cycle& cyc);
bool is_convex(const Cave& c, long long orientation_area2);

// True iff edge {e.a, e.b} is one of the cave's carrier edges.
bool cave_contains_edge(const Cave& c, std::span<const Vertex> carrier, Edge e);

// First convex cave met scanning clockwise from index `start` that does not
// contain `avoid`, whether contractible or not. nullopt for 4-cycles whose
// caves all contain `avoid`.
std::optional<Cave> find_convex_contractible_cave(const Cycle& c, std::size_t start, Edge avoid);

// First convex cave from `start` that avoids `avoid` AND is contractible.
std::optional<Cave> first_contractible_convex_cave(std::span<const Vertex> ring, std::size_t start,
                                                   Edge avoid);

}  // namespace gridk
