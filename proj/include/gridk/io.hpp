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

// Canonical JSON interchange and ASCII / SVG renderings.

#include <string>
#include <vector>

#include "gridk/grid.hpp"
#include "gridk/grid3d.hpp"

namespace gridk {

// A path or cycle together with the grid it lives in.
struct Document {
  bool closed = false;
  bool three_d = false;
  RectGrid grid{};
  Grid3D grid3{};
  std::vector<Vertex> vertices;
  std::vector<Vertex3> vertices3;
};

Document make_document(const Path& p, const RectGrid& r);
Document make_document(const Cycle& c, const RectGrid& r);
Document make_document(const Path3& p, const Grid3D& g);
Document make_document(const Cycle3& c, const Grid3D& g);

// {"kind":"path"|"cycle","grid":{...},"length":k,"vertices":[[x,y],...]},
// paths also carry "s" and "t". Keys sorted, no whitespace, newline-terminated.
std::string to_json(const Document& d);
// Throws InvalidInput on malformed text.
Document parse_document(const std::string& text);

// Validity plus agreement of the stored length / endpoints and the
// existence predicate for that length.
Diagnostic check_document(const Document& d);

// Walk edges solid ('-', '|'), other grid edges dotted ('.', ':'); y grows
// upward. 3D documents draw one block per layer, 'x' marking vertices that
// step to another layer.
std::string render_ascii(const Document& d);
// 24px per unit, dotted grid under the walk, vertices as filled circles.
std::string render_svg(const Document& d);

}  // namespace gridk
