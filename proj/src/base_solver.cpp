// Copyright 2026 The gridpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "gridpair/error.hpp"
#include "gridpair/router.hpp"

namespace gridpair {
namespace {

using Path = std::vector<int>;
using Ends = std::vector<std::pair<int, int>>;

class Board {
 public:
  explicit Board(int t) : t_(t), used_(t * t, 0), load_(t, 0) {}

  bool free(int a, int b) const { return !used_[a * t_ + b]; }
  int load(int v) const { return load_[v]; }
  int free_degree(int v) const { return t_ - 1 - load_[v]; }

  void take(int a, int b) { set(a, b, 1); }
  void release(int a, int b) { set(a, b, 0); }

  void take_path(const Path& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) take(p[i], p[i + 1]);
  }
  void release_path(const Path& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) release(p[i], p[i + 1]);
  }

 private:
  void set(int a, int b, char value) {
    used_[a * t_ + b] = value;
    used_[b * t_ + a] = value;
    const int delta = value ? 1 : -1;
    load_[a] += delta;
    load_[b] += delta;
  }

  int t_;
  std::vector<char> used_;
  std::vector<int> load_;
};

bool greedy_attempt(int t, const Ends& ends,
                    const std::vector<std::size_t>& order,
                    std::mt19937_64* rng, std::vector<Path>& paths) {
  Board board(t);
  auto offset = [&]() -> int {
    return rng ? static_cast<int>((*rng)() % static_cast<std::uint64_t>(t))
               : 0;
  };

  std::vector<std::size_t> pending;
  for (std::size_t idx : order) {
    const auto [u, v] = ends[idx];
    if (board.free(u, v)) {
      board.take(u, v);
      paths[idx] = {u, v};
    } else {
      pending.push_back(idx);
    }
  }

  std::vector<std::size_t> stubborn;
  for (std::size_t idx : pending) {
    const auto [u, v] = ends[idx];
    int best = -1;
    const int start = offset();
    for (int step = 0; step < t; ++step) {
      const int w = (start + step) % t;
      if (w == u || w == v || !board.free(u, w) || !board.free(w, v)) continue;
      if (best < 0 || board.load(w) < board.load(best)) best = w;
    }
    if (best < 0) {
      stubborn.push_back(idx);
      continue;
    }
    paths[idx] = {u, best, v};
    board.take_path(paths[idx]);
  }

  for (std::size_t idx : stubborn) {
    const auto [u, v] = ends[idx];
    int best1 = -1, best2 = -1;
    const int start1 = offset();
    const int start2 = offset();
    for (int s1 = 0; s1 < t; ++s1) {
      const int w1 = (start1 + s1) % t;
      if (w1 == u || w1 == v || !board.free(u, w1)) continue;
      for (int s2 = 0; s2 < t; ++s2) {
        const int w2 = (start2 + s2) % t;
        if (w2 == u || w2 == v || w2 == w1 || !board.free(w1, w2) ||
            !board.free(w2, v)) {
          continue;
        }
        if (best1 < 0 || board.load(w1) + board.load(w2) <
                             board.load(best1) + board.load(best2)) {
          best1 = w1;
          best2 = w2;
        }
      }
    }
    if (best1 < 0) return false;
    paths[idx] = {u, best1, best2, v};
    board.take_path(paths[idx]);
  }
  return true;
}

// Backtracking over simple paths, shortest first. Complete for instances
// where the node budget suffices: any trail system can be shortcut to a
// path system using a subset of its edges.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(int t, const Ends& ends, std::uint64_t budget)
      : t_(t), ends_(ends), board_(t), budget_(budget), need_(t, 0),
        paths_(ends.size()) {
    for (const auto& [u, v] : ends_) {
      ++need_[u];
      ++need_[v];
    }
  }

  std::optional<std::vector<Path>> run() {
    if (!feasible()) return std::nullopt;
    if (search(0)) return paths_;
    return std::nullopt;
  }

  bool budget_exhausted() const { return spent_ > budget_; }

 private:
  bool feasible() const {
    for (int x = 0; x < t_; ++x) {
      if (need_[x] > board_.free_degree(x)) return false;
    }
    return true;
  }

  void collect(int at, int target, Path& current, std::vector<bool>& on_path,
               std::vector<Path>& out) const {
    if (at == target) {
      out.push_back(current);
      return;
    }
    for (int w = 0; w < t_; ++w) {
      if (on_path[w] || !board_.free(at, w)) continue;
      on_path[w] = true;
      current.push_back(w);
      collect(w, target, current, on_path, out);
      current.pop_back();
      on_path[w] = false;
    }
  }

  bool search(std::size_t idx) {
    if (idx == ends_.size()) return true;
    if (++spent_ > budget_) return false;
    const auto [u, v] = ends_[idx];
    std::vector<Path> candidates;
    Path current{u};
    std::vector<bool> on_path(t_, false);
    on_path[u] = true;
    collect(u, v, current, on_path, candidates);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Path& a, const Path& b) {
                       return a.size() < b.size();
                     });
    --need_[u];
    --need_[v];
    for (const Path& p : candidates) {
      board_.take_path(p);
      if (feasible()) {
        paths_[idx] = p;
        if (search(idx + 1)) return true;
      }
      board_.release_path(p);
      if (budget_exhausted()) break;
    }
    ++need_[u];
    ++need_[v];
    return false;
  }

  int t_;
  const Ends& ends_;
  Board board_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
  std::vector<int> need_;
  std::vector<Path> paths_;
};

std::string describe(int t, const Ends& ends) {
  std::ostringstream os;
  os << "K_" << t << " with " << ends.size() << " demands:";
  for (const auto& [u, v] : ends) os << ' ' << u << '-' << v;
  return os.str();
}

}  // namespace

Routing solve_complete(int t, std::span<const DemandEdge> demands,
                       const CompleteSolveOptions& options) {
  if (t < 2) throw Error(ErrorCode::kInvalidArgument, "K_t needs t >= 2");
  Ends ends;
  ends.reserve(demands.size());
  std::vector<int> degree(t, 0);
  for (const DemandEdge& d : demands) {
    for (const Vertex* x : {&d.u, &d.v}) {
      if (x->dimension() != 1 || x->coords[0] < 0 || x->coords[0] >= t) {
        throw Error(ErrorCode::kInvalidArgument,
                    "demand " + std::to_string(d.id) + " endpoint " +
                        to_string(*x) + " is not a vertex of K_" +
                        std::to_string(t));
      }
    }
    if (d.u == d.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "demand " + std::to_string(d.id) + " is a self-demand");
    }
    ends.push_back({d.u.coords[0], d.v.coords[0]});
    ++degree[d.u.coords[0]];
    ++degree[d.v.coords[0]];
  }

  // Every demand at x leaves x on its own edge.
  const bool degree_ok = std::all_of(degree.begin(), degree.end(),
                                     [t](int d) { return d <= t - 1; });

  std::vector<Path> paths(ends.size());
  bool solved = false;
  if (degree_ok) {
    std::vector<std::size_t> order(ends.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    solved = greedy_attempt(t, ends, order, nullptr, paths);
    std::mt19937_64 rng(options.seed);
    for (int r = 0; !solved && r < options.max_restarts; ++r) {
      std::shuffle(order.begin(), order.end(), rng);
      solved = greedy_attempt(t, ends, order, &rng, paths);
    }
    if (!solved && options.exhaustive_fallback &&
        t <= options.exhaustive_max_t) {
      ExhaustiveSearch search(t, ends, options.exhaustive_node_budget);
      if (auto found = search.run()) {
        paths = std::move(*found);
        solved = true;
      }
    }
  }
  if (!solved) {
    throw Error(ErrorCode::kBaseSolverExhausted, describe(t, ends));
  }

  Routing routing;
  routing.trails.reserve(demands.size());
  for (std::size_t i = 0; i < demands.size(); ++i) {
    Trail trail;
    for (int x : paths[i]) trail.vertices.push_back(Vertex{x});
    routing.trails.push_back({demands[i].id, std::move(trail)});
  }
  std::sort(routing.trails.begin(), routing.trails.end(),
            [](const RoutedTrail& a, const RoutedTrail& b) {
              return a.id < b.id;
            });
  return routing;
}

}  // namespace gridpair
