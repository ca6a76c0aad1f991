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

#include "gridk/io.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <utility>

#include "gridk/cycles.hpp"
#include "gridk/errors.hpp"
#include "gridk/paths.hpp"

namespace gridk {

namespace {

using nlohmann::json;

// Walk points as (x, y, z); 2D documents use z = 1.
std::vector<Vertex3> points(const Document& d) {
  if (d.three_d) return d.vertices3;
  std::vector<Vertex3> out;
  out.reserve(d.vertices.size());
  for (const auto& v : d.vertices) out.push_back({v.x, v.y, 1});
  return out;
}

struct Frame {
  int x0, x1, y0, y1, layers;
};

Frame frame(const Document& d) {
  if (d.three_d) return {1, d.grid3.m, 1, d.grid3.n, d.grid3.o};
  return {d.grid.ox, d.grid.max_x(), d.grid.oy, d.grid.max_y(), 1};
}

using Step = std::pair<Vertex3, Vertex3>;

std::set<Step> walk_edges(const std::vector<Vertex3>& pts, bool closed) {
  std::set<Step> out;
  auto add = [&out](Vertex3 a, Vertex3 b) { out.insert(a < b ? Step{a, b} : Step{b, a}); };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) add(pts[i], pts[i + 1]);
  if (closed && pts.size() > 2) add(pts.back(), pts.front());
  return out;
}

bool has(const std::set<Step>& e, Vertex3 a, Vertex3 b) {
  return e.count(a < b ? Step{a, b} : Step{b, a}) != 0;
}

json vertex_json(const Vertex& v) { return json::array({v.x, v.y}); }
json vertex_json(const Vertex3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

Document make_document(const Path& p, const RectGrid& r) {
  Document d;
  d.grid = r;
  d.vertices = p.vertices;
  return d;
}

Document make_document(const Cycle& c, const RectGrid& r) {
  Document d;
  d.closed = true;
  d.grid = r;
  d.vertices = c.vertices;
  return d;
}

Document make_document(const Path3& p, const Grid3D& g) {
  Document d;
  d.three_d = true;
  d.grid3 = g;
  d.vertices3 = p.vertices;
  return d;
}

Document make_document(const Cycle3& c, const Grid3D& g) {
  Document d;
  d.closed = true;
  d.three_d = true;
  d.grid3 = g;
  d.vertices3 = c.vertices;
  return d;
}

std::string to_json(const Document& d) {
  json j;
  j["kind"] = d.closed ? "cycle" : "path";
  json verts = json::array();
  if (d.three_d) {
    j["grid"] = {{"m", d.grid3.m}, {"n", d.grid3.n}, {"o", d.grid3.o}};
    for (const auto& v : d.vertices3) verts.push_back(vertex_json(v));
    if (!d.closed && !d.vertices3.empty()) {
      j["s"] = vertex_json(d.vertices3.front());
      j["t"] = vertex_json(d.vertices3.back());
    }
    j["length"] = d.vertices3.size();
  } else {
    j["grid"] = {{"m", d.grid.m}, {"n", d.grid.n}};
    if (d.grid.ox != 1 || d.grid.oy != 1) j["grid"]["origin"] = json::array({d.grid.ox, d.grid.oy});
    for (const auto& v : d.vertices) verts.push_back(vertex_json(v));
    if (!d.closed && !d.vertices.empty()) {
      j["s"] = vertex_json(d.vertices.front());
      j["t"] = vertex_json(d.vertices.back());
    }
    j["length"] = d.vertices.size();
  }
  j["vertices"] = std::move(verts);
  return j.dump() + "\n";
}

Document parse_document(const std::string& text) {
  auto bad = [](const std::string& why) {
    return GridError(ErrorKind::InvalidInput, "malformed", "malformed document: " + why);
  };
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw bad(e.what());
  }
  try {
    Document d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "path" && kind != "cycle") throw bad("kind must be path or cycle");
    d.closed = kind == "cycle";
    const json& g = j.at("grid");
    d.three_d = g.contains("o");
    for (const auto& v : j.at("vertices")) {
      if (v.size() != (d.three_d ? 3u : 2u)) throw bad("vertex arity");
      if (d.three_d) d.vertices3.push_back({v[0].get<int>(), v[1].get<int>(), v[2].get<int>()});
      else d.vertices.push_back({v[0].get<int>(), v[1].get<int>()});
    }
    if (d.three_d) {
      d.grid3 = {g.at("m").get<int>(), g.at("n").get<int>(), g.at("o").get<int>()};
    } else {
      d.grid = RectGrid{g.at("m").get<int>(), g.at("n").get<int>()};
      if (g.contains("origin")) {
        d.grid.ox = g["origin"].at(0).get<int>();
        d.grid.oy = g["origin"].at(1).get<int>();
      }
    }
    const std::size_t count = d.three_d ? d.vertices3.size() : d.vertices.size();
    if (j.contains("length") && j["length"].get<std::size_t>() != count)
      throw bad("length field does not match the vertex list");
    if (!d.closed && count > 0) {
      if (j.contains("s") && j["s"] != (d.three_d ? vertex_json(d.vertices3.front())
                                                   : vertex_json(d.vertices.front())))
        throw bad("s does not match the first vertex");
      if (j.contains("t") &&
          j["t"] != (d.three_d ? vertex_json(d.vertices3.back()) : vertex_json(d.vertices.back())))
        throw bad("t does not match the last vertex");
    }
    return d;
  } catch (const json::exception& e) {
    throw bad(e.what());
  }
}

Diagnostic check_document(const Document& d) {
  const auto k = static_cast<long long>(d.three_d ? d.vertices3.size() : d.vertices.size());
  if (d.three_d) {
    auto diag = d.closed ? validate_cycle3(d.vertices3, d.grid3) : validate_path3(d.vertices3, d.grid3);
    if (!diag.ok) return diag;
    const bool exists = d.closed ? cycle_exists_3d(d.grid3, k)
                                 : k == 1 || path_exists_3d(d.grid3, d.vertices3.front(),
                                                            d.vertices3.back(), k);
    if (!exists) return {false, "existence predicate rejects length " + std::to_string(k)};
    return {true, ""};
  }
  auto diag = d.closed ? validate_cycle(Cycle{d.vertices}, d.grid) : validate_path(Path{d.vertices}, d.grid);
  if (!diag.ok) return diag;
  const bool exists = d.closed ? cycle_exists(d.grid, k)
                               : k == 1 || path_exists(d.grid, d.vertices.front(), d.vertices.back(), k);
  if (!exists) return {false, "existence predicate rejects length " + std::to_string(k)};
  return {true, ""};
}

std::string render_ascii(const Document& d) {
  const auto pts = points(d);
  const auto edges = walk_edges(pts, d.closed);
  const Frame f = frame(d);
  std::set<Vertex3> on(pts.begin(), pts.end());
  std::ostringstream out;
  for (int z = 1; z <= f.layers; ++z) {
    if (d.three_d) out << "z=" << z << "\n";
    for (int y = f.y1; y >= f.y0; --y) {
      for (int x = f.x0; x <= f.x1; ++x) {
        const Vertex3 v{x, y, z};
        char c = '+';
        if (on.count(v)) {
          c = 'o';
          if (d.three_d && (has(edges, v, {x, y, z - 1}) || has(edges, v, {x, y, z + 1}))) c = 'x';
          if (!d.closed && v == pts.front()) c = 'S';
          if (!d.closed && v == pts.back()) c = 'T';
        }
        out << c;
        if (x < f.x1) out << (has(edges, v, {x + 1, y, z}) ? "---" : " . ");
      }
      out << "\n";
      if (y > f.y0) {
        for (int x = f.x0; x <= f.x1; ++x) {
          out << (has(edges, {x, y, z}, {x, y - 1, z}) ? '|' : ':');
          if (x < f.x1) out << "   ";
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

std::string render_svg(const Document& d) {
  constexpr int unit = 24;
  const auto pts = points(d);
  const Frame f = frame(d);
  const int cols = f.x1 - f.x0 + 1, rows = f.y1 - f.y0 + 1;
  const int width = (f.layers * (cols + 1) + 1) * unit;
  const int height = (rows + 1) * unit;
  auto px = [&](const Vertex3& v) { return ((v.z - 1) * (cols + 1) + v.x - f.x0 + 1) * unit; };
  auto py = [&](const Vertex3& v) { return (f.y1 - v.y + 1) * unit; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<g stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"2,3\">\n";
  for (int z = 1; z <= f.layers; ++z)
    for (int x = f.x0; x <= f.x1; ++x)
      for (int y = f.y0; y <= f.y1; ++y) {
        const Vertex3 v{x, y, z};
        if (x < f.x1) {
          const Vertex3 w{x + 1, y, z};
          out << "<line x1=\"" << px(v) << "\" y1=\"" << py(v) << "\" x2=\"" << px(w) << "\" y2=\""
              << py(w) << "\"/>\n";
        }
        if (y < f.y1) {
          const Vertex3 w{x, y + 1, z};
          out << "<line x1=\"" << px(v) << "\" y1=\"" << py(v) << "\" x2=\"" << px(w) << "\" y2=\""
              << py(w) << "\"/>\n";
        }
      }
  out << "</g>\n";
  out << (d.closed ? "<polygon" : "<polyline") << " fill=\"none\" stroke=\"#000\" stroke-width=\"3\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << (i ? " " : "") << px(pts[i]) << "," << py(pts[i]);
  out << "\"/>\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool end = !d.closed && (i == 0 || i + 1 == pts.size());
    out << "<circle cx=\"" << px(pts[i]) << "\" cy=\"" << py(pts[i]) << "\" r=\"" << (end ? 6 : 4)
        << "\" fill=\"" << (end ? "#c00" : "#000") << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gridk
