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

#include "gridk/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "gridk/errors.hpp"

namespace gridk {

ShrinkBudget::ShrinkBudget(long long amount, std::size_t cycle_length) : amount_(amount) {
  if (amount % 2 != 0 || amount < 0 || amount > static_cast<long long>(cycle_length) - 4)
    throw GridError(ErrorKind::BudgetInvalid, "budget",
                    "shrink budget " + std::to_string(amount) + " invalid for a cycle of length " +
                        std::to_string(cycle_length));
}

namespace {

// Comb over an even number of columns: up column 1, snake through rows 2..n
// of the remaining columns, back along row 1.
std::vector<Vertex> comb(int width, int height) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(width) * height);
  for (int y = 1; y <= height; ++y) out.push_back({1, y});
  for (int x = 2; x <= width; ++x) {
    if (x % 2 == 0)
      for (int y = height; y >= 2; --y) out.push_back({x, y});
    else
      for (int y = 2; y <= height; ++y) out.push_back({x, y});
  }
  for (int x = width; x >= 2; --x) out.push_back({x, 1});
  return out;
}

long long ceil_sqrt(long long v) {
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
  while (r * r < v) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= v) --r;
  return r;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

int cross(Vertex a, Vertex b) { return a.x * b.y - a.y * b.x; }

// Node-linked cycle with a dense vertex -> node map over a bounding box.
class WorkingCycle {
 public:
  WorkingCycle(const std::vector<Vertex>& ring) {
    x0_ = x1_ = ring.front().x;
    y0_ = y1_ = ring.front().y;
    for (const auto& v : ring) {
      x0_ = std::min(x0_, v.x);
      x1_ = std::max(x1_, v.x);
      y0_ = std::min(y0_, v.y);
      y1_ = std::max(y1_, v.y);
    }
    h_ = static_cast<long long>(y1_ - y0_ + 1);
    occ_.assign(static_cast<std::size_t>((x1_ - x0_ + 1) * h_), -1);
    const int n = static_cast<int>(ring.size());
    pos_ = ring;
    next_.resize(ring.size());
    prev_.resize(ring.size());
    for (int i = 0; i < n; ++i) {
      next_[static_cast<std::size_t>(i)] = (i + 1) % n;
      prev_[static_cast<std::size_t>(i)] = (i + n - 1) % n;
      occ_[cell(ring[static_cast<std::size_t>(i)])] = i;
    }
    size_ = ring.size();
  }

  int node_at(Vertex v) const {
    if (v.x < x0_ || v.x > x1_ || v.y < y0_ || v.y > y1_) return -1;
    return occ_[cell(v)];
  }
  Vertex pos(int node) const { return pos_[static_cast<std::size_t>(node)]; }
  int next(int node) const { return next_[static_cast<std::size_t>(node)]; }
  int prev(int node) const { return prev_[static_cast<std::size_t>(node)]; }
  void link(int a, int b) {
    next_[static_cast<std::size_t>(a)] = b;
    prev_[static_cast<std::size_t>(b)] = a;
  }
  std::size_t size() const { return size_; }
  void set_size(std::size_t s) { size_ = s; }

  Vertex step(int node) const { return pos(next(node)) - pos(node); }

  int add(Vertex v) {
    int id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      pos_[static_cast<std::size_t>(id)] = v;
    } else {
      id = static_cast<int>(pos_.size());
      pos_.push_back(v);
      next_.push_back(-1);
      prev_.push_back(-1);
    }
    occ_[cell(v)] = id;
    return id;
  }

  void remove(int node) {
    occ_[cell(pos(node))] = -1;
    free_.push_back(node);
  }

  std::vector<Vertex> walk(int from) const {
    std::vector<Vertex> out;
    out.reserve(size_);
    int y = from;
    do {
      out.push_back(pos(y));
      y = next(y);
    } while (y != from);
    return out;
  }

 private:
  std::size_t cell(Vertex v) const {
    return static_cast<std::size_t>((v.x - x0_) * h_ + (v.y - y0_));
  }

  int x0_, x1_, y0_, y1_;
  long long h_;
  std::vector<int> occ_;
  std::vector<Vertex> pos_;
  std::vector<int> next_, prev_;
  std::vector<int> free_;
  std::size_t size_ = 0;
};

struct FoundCave {
  int p, a, x, q;  // p -> a is the first edge, x -> q the last one
  Vertex first, middle;
  int run;  // number of middle edges
};

// Saved links of an outer cycle while its sub-cycle is being shrunk.
struct Frame {
  bool forward;  // sub-cycle is the u -> v arc (true) or the v -> u arc
  int u, v;
  int saved_a, saved_b;
  std::size_t outer_extra;
  int outer_t, outer_s;
};

class Shrinker {
 public:
  Shrinker(WorkingCycle& wc, int t, int s, long long budget, const ShrinkObserver& obs,
           ShrinkStats* stats)
      : wc_(wc), t_(t), s_(s), budget_(budget), obs_(obs), stats_(stats) {}

  void run() {
    int resume = s_;
    while (budget_ > 0) {
      const std::size_t len_before = wc_.size();
      const long long budget_before = budget_;
      auto cave = scan(resume);
      if (!cave)
        throw std::logic_error("no convex cave avoids the kept edge; input is not a solid-grid cycle");

      int blocked = -1;
      for (int j = 1; j < cave->run; ++j) {
        int node = wc_.node_at(wc_.pos(cave->p) + j * cave->middle);
        if (node >= 0) {
          blocked = node;
          break;
        }
      }
      ShrinkEvent::Kind kind;
      if (blocked < 0) {
        resume = contract(*cave);
        budget_ -= 2;
        kind = ShrinkEvent::Kind::Contract;
        if (stats_) ++stats_->contractions;
      } else {
        kind = split(*cave, blocked);
        resume = s_;
      }
      if (!(budget_ < budget_before || wc_.size() < len_before))
        throw std::logic_error("shrink step made no progress");
      if (obs_) notify(kind, len_before, budget_before);
    }
    unwind();
  }

  int anchor() const { return s_; }

 private:
  std::optional<FoundCave> scan(int cur) {
    const long long area_sign = -1;  // working cycles are clockwise
    while (true) {
      if (stats_) ++stats_->scan_steps;
      if (cur == t_) return std::nullopt;
      int a = wc_.next(cur);
      if (a == t_) return std::nullopt;
      Vertex d = wc_.step(cur);
      Vertex w = wc_.step(a);
      if (w == d) {
        cur = a;
        continue;
      }
      int x = a;
      int run = 0;
      while (wc_.step(x) == w) {
        x = wc_.next(x);
        ++run;
        if (x == t_) return std::nullopt;
        if (stats_) ++stats_->scan_steps;
      }
      int q = wc_.next(x);
      if (wc_.step(x) == Vertex{0, 0} - d) {
        if (cross(d, w) * area_sign > 0) return FoundCave{cur, a, x, q, d, w, run};
      }
      cur = wc_.prev(x);
    }
  }

  // Contracts a free cave and returns the node to resume scanning from.
  int contract(const FoundCave& c) {
    for (int y = c.a;;) {
      int nx = wc_.next(y);
      wc_.remove(y);
      if (y == c.x) break;
      y = nx;
    }
    int last = c.p;
    Vertex base = wc_.pos(c.p);
    for (int j = 1; j < c.run; ++j) {
      int node = wc_.add(base + j * c.middle);
      wc_.link(last, node);
      last = node;
    }
    wc_.link(last, c.q);
    wc_.set_size(wc_.size() - 2);

    int y = c.p;
    while (y != s_ && wc_.pos(y) - wc_.pos(wc_.prev(y)) == c.middle) y = wc_.prev(y);
    return y == s_ ? s_ : wc_.prev(y);
  }

  // Non-contractible convex cave: cut along the chord (u, v).
  ShrinkEvent::Kind split(const FoundCave& c, int v) {
    const int u = wc_.node_at(wc_.pos(v) + c.first);
    if (u < 0) throw std::logic_error("cave middle vertex missing");

    // Walk u -> v and v -> u in lockstep until one arc closes.
    int pa = u, pb = v;
    std::size_t la = 1, lb = 1;
    bool ea = false, eb = false;
    bool forward_done = false;
    while (true) {
      if (pa == t_) ea = true;
      pa = wc_.next(pa);
      ++la;
      if (pa == v) {
        forward_done = true;
        break;
      }
      if (pb == t_) eb = true;
      pb = wc_.next(pb);
      ++lb;
      if (pb == u) break;
    }
    std::size_t arc_fwd, arc_bwd;  // |C(u->v)|, |C(v->u)|
    bool e_in_fwd;
    if (forward_done) {
      arc_fwd = la;
      arc_bwd = wc_.size() + 2 - la;
      e_in_fwd = ea;
    } else {
      arc_bwd = lb;
      arc_fwd = wc_.size() + 2 - lb;
      e_in_fwd = !eb;
    }
    const bool drop_fwd = !e_in_fwd;
    const std::size_t drop_len = drop_fwd ? arc_fwd : arc_bwd;
    const int from = drop_fwd ? u : v;
    const int to = drop_fwd ? v : u;

    if (static_cast<long long>(drop_len) - 2 <= budget_) {
      for (int y = wc_.next(from); y != to;) {
        int nx = wc_.next(y);
        wc_.remove(y);
        y = nx;
      }
      wc_.link(from, to);
      budget_ -= static_cast<long long>(drop_len) - 2;
      wc_.set_size(wc_.size() - (drop_len - 2));
      if (stats_) ++stats_->splices;
      return ShrinkEvent::Kind::Splice;
    }

    // Continue on the sub-cycle: the dropped arc closed by the chord to -> from.
    Frame f;
    f.forward = drop_fwd;
    f.u = from;
    f.v = to;
    f.saved_a = wc_.next(to);
    f.saved_b = wc_.prev(from);
    f.outer_extra = wc_.size() - drop_len;
    f.outer_t = t_;
    f.outer_s = s_;
    frames_.push_back(f);
    wc_.link(to, from);
    wc_.set_size(drop_len);
    t_ = to;
    s_ = from;
    if (stats_) ++stats_->descents;
    return ShrinkEvent::Kind::Descend;
  }

  void unwind() {
    while (!frames_.empty()) {
      Frame f = frames_.back();
      frames_.pop_back();
      if (wc_.next(f.v) != f.u) throw std::logic_error("sub-cycle lost its chord");
      wc_.link(f.v, f.saved_a);
      wc_.link(f.saved_b, f.u);
      wc_.set_size(wc_.size() + f.outer_extra);
      t_ = f.outer_t;
      s_ = f.outer_s;
    }
  }

  void notify(ShrinkEvent::Kind kind, std::size_t len_before, long long budget_before) {
    ShrinkEvent ev;
    ev.kind = kind;
    ev.length_before = len_before;
    ev.length_after = wc_.size();
    ev.budget_before = budget_before;
    ev.budget_after = budget_;
    ev.kept = {wc_.pos(t_), wc_.pos(s_)};
    ev.active = wc_.walk(s_);
    obs_(ev);
  }

  WorkingCycle& wc_;
  int t_, s_;
  long long budget_;
  const ShrinkObserver& obs_;
  ShrinkStats* stats_;
  std::vector<Frame> frames_;
};

}  // namespace

Cycle longest_cycle(const RectGrid& r) {
  if (r.m < 2 || r.n < 2)
    throw GridError(ErrorKind::NoCycle, "dimensions",
                    "R(" + std::to_string(r.m) + "," + std::to_string(r.n) + ") has no cycle");
  std::vector<Vertex> ring;
  if (r.m % 2 == 0) {
    ring = comb(r.m, r.n);
  } else if (r.n % 2 == 0) {
    ring = comb(r.n, r.m);
    for (auto& v : ring) std::swap(v.x, v.y);
  } else {
    // Odd by odd: comb over columns 2..m, then fold column 1 (minus the
    // corner (1,1)) into the comb's spine with two-vertex detours.
    auto inner = comb(r.m - 1, r.n);
    ring.reserve(inner.size() + static_cast<std::size_t>(r.n));
    for (std::size_t i = 0; i < inner.size(); ++i) {
      Vertex v{inner[i].x + 1, inner[i].y};
      ring.push_back(v);
      if (inner[i].x == 1 && v.y % 2 == 0 && v.y < r.n) {
        ring.push_back({1, v.y});
        ring.push_back({1, v.y + 1});
      }
    }
  }
  for (auto& v : ring) v = v + Vertex{r.ox - 1, r.oy - 1};
  return canonical_cycle(std::move(ring));
}

bool cycle_exists(const RectGrid& r, long long k) {
  return r.m > 1 && r.n > 1 && k % 2 == 0 && k >= 4 && k <= r.size();
}

RectGrid subgrid_for_k(const RectGrid& r, long long k) {
  if (!cycle_exists(r, k))
    throw GridError(ErrorKind::NoCycle, "range",
                    "no cycle of length " + std::to_string(k) + " in the grid");
  const long long side = ceil_sqrt(k + 1);
  const long long small = std::min(r.m, r.n);
  if (small >= side) return RectGrid{static_cast<int>(side), static_cast<int>(side), r.ox, r.oy};
  const long long len = std::min<long long>(std::max(r.m, r.n), ceil_div(k + 1, small));
  if (r.m >= r.n) return RectGrid{static_cast<int>(len), r.n, r.ox, r.oy};
  return RectGrid{r.m, static_cast<int>(len), r.ox, r.oy};
}

Cycle shrink_cycle(const Cycle& c, Edge e, long long budget, const ShrinkObserver& observer,
                   ShrinkStats* stats) {
  ShrinkBudget checked(budget, c.size());
  Cycle canon = canonical_cycle(c.vertices);
  if (checked.value() == 0) return canon;

  WorkingCycle wc(canon.vertices);
  int a = wc.node_at(e.a), b = wc.node_at(e.b);
  int t, s;
  if (a >= 0 && b >= 0 && wc.next(a) == b) {
    t = a;
    s = b;
  } else if (a >= 0 && b >= 0 && wc.next(b) == a) {
    t = b;
    s = a;
  } else {
    throw GridError(ErrorKind::EdgeNotInCycle, "edge",
                    "edge " + to_string(e.a) + "-" + to_string(e.b) + " is not on the cycle");
  }
  Shrinker shrinker(wc, t, s, checked.value(), observer, stats);
  shrinker.run();
  return canonical_cycle(wc.walk(shrinker.anchor()));
}

Cycle shrink_cycle(const Cycle& c, Edge e, ShrinkBudget budget) {
  return shrink_cycle(c, e, budget.value());
}

Cycle find_cycle(const RectGrid& r, long long k) {
  if (r.m < 2 || r.n < 2)
    throw GridError(ErrorKind::NoSuchCycle, "dimensions", "a grid with a side of 1 has no cycle");
  if (k % 2 != 0)
    throw GridError(ErrorKind::NoSuchCycle, "parity", "cycle lengths are even, got " + std::to_string(k));
  if (k < 4 || k > r.size())
    throw GridError(ErrorKind::NoSuchCycle, "range",
                    "cycle length " + std::to_string(k) + " outside [4, " + std::to_string(r.size()) + "]");
  Cycle longest = longest_cycle(subgrid_for_k(r, k));
  Edge e{longest.vertices[0], longest.vertices[1]};
  return shrink_cycle(longest, e, static_cast<long long>(longest.size()) - k);
}

Cycle shrink_cycle_solid(const SolidGrid& g, const Cycle& h, long long k) {
  if (!is_solid(g)) throw GridError(ErrorKind::NotSolid, "not-solid", "grid graph has a hole");
  auto diag = validate_cycle(h, g);
  if (!diag.ok || h.size() != g.size())
    throw GridError(ErrorKind::NotHamiltonian, "not-hamiltonian",
                    diag.ok ? "cycle misses vertices of the grid" : diag.violation);
  if (k % 2 != 0)
    throw GridError(ErrorKind::NoSuchCycle, "parity", "cycle lengths are even, got " + std::to_string(k));
  if (k < 4 || k > static_cast<long long>(g.size()))
    throw GridError(ErrorKind::NoSuchCycle, "range",
                    "cycle length " + std::to_string(k) + " outside [4, " + std::to_string(g.size()) + "]");
  Cycle canon = canonical_cycle(h.vertices);
  Edge e{canon.vertices[0], canon.vertices[1]};
  return shrink_cycle(canon, e, static_cast<long long>(canon.size()) - k);
}

}  // namespace gridk
