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

// gridkpath: generate, check, render and benchmark k-paths and k-cycles.

#include <CLI11.hpp>
#include <json.hpp>

#include <sched.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gridk/cycles.hpp"
#include "gridk/errors.hpp"
#include "gridk/grid3d.hpp"
#include "gridk/io.hpp"
#include "gridk/oracle.hpp"
#include "gridk/paths.hpp"

namespace {

using namespace gridk;
using nlohmann::json;

constexpr int kExitNone = 1;
constexpr int kExitUsage = 2;

void emit(const Document& d, const std::string& format) {
  if (format == "ascii") std::cout << render_ascii(d);
  else if (format == "svg") std::cout << render_svg(d);
  else std::cout << to_json(d);
}

int report(const GridError& e, std::optional<long long> l = std::nullopt,
           std::optional<long long> L = std::nullopt) {
  json j;
  j["error"] = e.reason();
  j["message"] = e.what();
  if (l) j["l"] = *l;
  if (L) j["L"] = *L;
  std::cout << j.dump() << "\n";
  return kExitNone;
}

// Longest length for error reports, skipped on grids too large to solve.
std::optional<long long> longest_for_report(const RectGrid& r, Vertex s, Vertex t) {
  if (s == t || !r.contains(s) || !r.contains(t) || r.size() > 4'000'000) return std::nullopt;
  return longest_path_len(r, s, t);
}

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = std::log(xs[i]), y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  return den == 0 ? 0.0 : (n * sxy - sx * sy) / den;
}

template <typename F>
std::vector<double> time_runs(int reps, F&& run) {
  std::vector<double> out;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    run();
    auto t1 = std::chrono::steady_clock::now();
    out.push_back(static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

double median(const std::vector<double>& v) {
  const auto n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

void pin_to_one_core() {
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(0, &set);
  sched_setaffinity(0, sizeof(set), &set);
}

int bench(const std::string& suite, int reps, std::vector<long long> sizes) {
  pin_to_one_core();
  const bool cycles = suite == "cycles";
  if (sizes.empty())
    sizes = cycles ? std::vector<long long>{10'000, 100'000, 1'000'000}
                   : std::vector<long long>{1'000, 3'000, 10'000};
  std::cout << "suite,k,median_ns,min_ns,max_ns\n";
  if (reps <= 0) return 0;
  std::vector<double> ks, meds;
  const RectGrid ambient{1'000'000, 1'000'000};
  for (long long k : sizes) {
    std::vector<double> times;
    if (cycles) {
      times = time_runs(reps, [&] { (void)find_cycle(ambient, k); });
    } else {
      // Adjacent endpoints (window holds both) and endpoints k/2 apart on a
      // row (window at s plus a straight tail); report the slower one.
      const Vertex s{500'000, 500'000};
      const Vertex near{s.x + 1, s.y};
      const Vertex far{s.x + static_cast<int>(k / 2) - 1, s.y};
      const long long k_near = k % 2 == 0 ? k : k + 1;
      const long long l_far = shortest_len(s, far);
      const long long k_far = (k - l_far) % 2 == 0 ? k : k + 1;
      auto a = time_runs(reps, [&] { (void)find_path(ambient, s, near, k_near); });
      auto b = time_runs(reps, [&] { (void)find_path(ambient, s, far, k_far); });
      times = median(a) >= median(b) ? a : b;
    }
    ks.push_back(static_cast<double>(k));
    meds.push_back(median(times));
    std::cout << suite << "," << k << "," << static_cast<long long>(median(times)) << ","
              << static_cast<long long>(times.front()) << "," << static_cast<long long>(times.back())
              << "\n";
  }
  std::cout << "# slope=" << slope(ks, meds) << "\n";
  return 0;
}

std::string read_input(const std::string& file) {
  std::stringstream buf;
  if (file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("file", "cannot read " + file);
    buf << in.rdbuf();
  }
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paths and cycles of a prescribed length in grid graphs"};
  app.require_subcommand(1);
  std::string format = "json";
  auto add_format = [&format](CLI::App* c) {
    c->add_option("--format", format, "json, ascii or svg")
        ->check(CLI::IsMember({"json", "ascii", "svg"}));
  };

  int m = 0, n = 0, o = 0, sx = 0, sy = 0, sz = 0, tx = 0, ty = 0, tz = 0;
  long long k = 0;
  bool trace = false;
  auto ints = [](CLI::App* c, std::initializer_list<std::pair<const char*, int*>> args) {
    for (auto [name, v] : args) c->add_option(name, *v)->required();
  };

  auto* cycle = app.add_subcommand("cycle", "k-cycle in R(m,n)");
  ints(cycle, {{"m", &m}, {"n", &n}});
  cycle->add_option("k", k)->required();
  add_format(cycle);

  auto* path = app.add_subcommand("path", "k-vertex s-t path in R(m,n)");
  ints(path, {{"m", &m}, {"n", &n}, {"sx", &sx}, {"sy", &sy}, {"tx", &tx}, {"ty", &ty}});
  path->add_option("k", k)->required();
  path->add_flag("--trace", trace, "print every contraction step as JSON on stderr");
  add_format(path);

  auto* cycle3d = app.add_subcommand("cycle3d", "k-cycle in R(m,n,o)");
  ints(cycle3d, {{"m", &m}, {"n", &n}, {"o", &o}});
  cycle3d->add_option("k", k)->required();
  add_format(cycle3d);

  auto* path3d = app.add_subcommand("path3d", "k-vertex s-t path in R(m,n,o)");
  ints(path3d, {{"m", &m}, {"n", &n}, {"o", &o}, {"sx", &sx}, {"sy", &sy}, {"sz", &sz}, {"tx", &tx},
                 {"ty", &ty}, {"tz", &tz}});
  path3d->add_option("k", k)->required();
  add_format(path3d);

  std::string file;
  auto* check = app.add_subcommand("check", "validate a path or cycle document");
  check->add_option("file", file, "document path, or - for stdin")->required();
  add_format(check);

  std::string suite = "cycles";
  int reps = 5;
  std::vector<long long> sizes;
  auto* benchmark = app.add_subcommand("bench", "timing table as CSV");
  benchmark->add_option("--suite", suite)->check(CLI::IsMember({"cycles", "paths"}));
  benchmark->add_option("--reps", reps);
  benchmark->add_option("--sizes", sizes, "override the k values");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive answers on small grids");
  oracle_cmd->require_subcommand(1);
  auto* o_cycle = oracle_cmd->add_subcommand("cycle", "does R(m,n) hold a k-cycle");
  ints(o_cycle, {{"m", &m}, {"n", &n}});
  o_cycle->add_option("k", k)->required();
  auto* o_path = oracle_cmd->add_subcommand("path", "does R(m,n) hold a k-vertex s-t path");
  ints(o_path, {{"m", &m}, {"n", &n}, {"sx", &sx}, {"sy", &sy}, {"tx", &tx}, {"ty", &ty}});
  o_path->add_option("k", k)->required();
  auto* o_longest = oracle_cmd->add_subcommand("longest", "longest s-t path length in R(m,n)");
  ints(o_longest, {{"m", &m}, {"n", &n}, {"sx", &sx}, {"sy", &sy}, {"tx", &tx}, {"ty", &ty}});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Vertex s{sx, sy}, t{tx, ty};
  try {
    if (m < 0 || n < 0 || o < 0) throw CLI::ValidationError("dimensions", "must be positive");
    if (*cycle) {
      const RectGrid r{m, n};
      try {
        emit(make_document(find_cycle(r, k), r), format);
      } catch (const GridError& e) {
        return report(e);
      }
    } else if (*path) {
      const RectGrid r{m, n};
      try {
        Path p = initial_path_for_k(r, s, t, k);
        PathShrinkObserver obs;
        if (trace)
          obs = [&r](const Path&, const Cave&, const Path& after) {
            std::cerr << to_json(make_document(after, r));
          };
        emit(make_document(shrink_path(p, r, k, obs), r), format);
      } catch (const GridError& e) {
        std::optional<long long> L = e.longest;
        if (!L) L = longest_for_report(r, s, t);
        return report(e, r.contains(s) && r.contains(t) ? std::optional(shortest_len(s, t)) : std::nullopt, L);
      }
    } else if (*cycle3d) {
      const Grid3D g{m, n, o};
      try {
        emit(make_document(find_cycle_3d(g, k), g), format);
      } catch (const GridError& e) {
        return report(e);
      }
    } else if (*path3d) {
      const Grid3D g{m, n, o};
      const Vertex3 a{sx, sy, sz}, b{tx, ty, tz};
      try {
        emit(make_document(find_path_3d(g, a, b, k), g), format);
      } catch (const GridError& e) {
        return report(e, g.contains(a) && g.contains(b) ? std::optional(shortest_len(a, b)) : std::nullopt);
      }
    } else if (*check) {
      Document d;
      try {
        d = parse_document(read_input(file));
      } catch (const GridError& e) {
        return report(e);
      }
      const Diagnostic diag = check_document(d);
      if (format == "json") {
        json j;
        j["valid"] = diag.ok;
        j["kind"] = d.closed ? "cycle" : "path";
        j["length"] = d.three_d ? d.vertices3.size() : d.vertices.size();
        if (!diag.ok) j["violation"] = diag.violation;
        std::cout << j.dump() << "\n";
      } else if (diag.ok) {
        emit(d, format);
      } else {
        std::cout << "invalid: " << diag.violation << "\n";
      }
      return diag.ok ? 0 : kExitNone;
    } else if (*benchmark) {
      return bench(suite, reps, sizes);
    } else if (*oracle_cmd) {
      const auto g = oracle::LatticeGraph::rect(m, n);
      const RectGrid r{m, n};
      json j;
      try {
        if (*o_cycle) {
          j["exists"] = oracle::exists_cycle(g, static_cast<int>(k));
        } else {
          if (!r.contains(s) || !r.contains(t))
            throw GridError(ErrorKind::VertexOutOfGrid, "out-of-grid", "endpoint outside the grid");
          if (*o_path) j["exists"] = oracle::exists_path(g, g.index_of(s), g.index_of(t), static_cast<int>(k));
          else j["longest"] = oracle::longest_path_len(g, g.index_of(s), g.index_of(t));
        }
      } catch (const GridError& e) {
        return report(e);
      }
      std::cout << j.dump() << "\n";
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
