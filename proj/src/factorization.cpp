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

#include "gridpair/factorization.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <string>

#include "gridpair/error.hpp"

namespace gridpair {
namespace {

using EdgeList = std::vector<std::size_t>;

void require_regular(const Multigraph& graph, int degree) {
  const auto deg = graph.degrees();
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] != degree) {
      throw Error(ErrorCode::kNotRegular,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(deg[v]) + ", expected " +
                      std::to_string(degree));
    }
  }
}

// side[v] in {0, 1}; throws if an odd cycle or loop exists.
std::vector<int> two_color(const Multigraph& graph) {
  std::vector<std::vector<std::size_t>> adj(graph.vertex_count);
  for (const auto& [a, b] : graph.edges) {
    if (a == b) {
      throw Error(ErrorCode::kNotBipartite,
                  "loop at vertex " + std::to_string(a));
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> side(graph.vertex_count, -1);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < graph.vertex_count; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          throw Error(ErrorCode::kNotBipartite,
                      "odd cycle through vertex " + std::to_string(v));
        }
      }
    }
  }
  return side;
}

class BipartiteDecomposer {
 public:
  BipartiteDecomposer(const Multigraph& graph, std::vector<int> side)
      : graph_(graph), side_(std::move(side)) {}

  void decompose(EdgeList edges, int k, std::vector<Matching>& out) {
    if (k == 0) return;
    if (k == 1) {
      std::sort(edges.begin(), edges.end());
      out.push_back(std::move(edges));
      return;
    }
    if (k % 2 == 1) {
      Matching m = perfect_matching(edges);
      std::vector<bool> taken(graph_.edges.size(), false);
      for (std::size_t e : m) taken[e] = true;
      std::erase_if(edges, [&](std::size_t e) { return taken[e]; });
      out.push_back(std::move(m));
      decompose(std::move(edges), k - 1, out);
      return;
    }
    auto [first, second] = euler_split(edges);
    decompose(std::move(first), k / 2, out);
    decompose(std::move(second), k / 2, out);
  }

 private:
  // Edges traversed left-to-right along Euler circuits form a
  // (k/2)-regular half; the rest form the other half.
  std::pair<EdgeList, EdgeList> euler_split(const EdgeList& edges) const {
    Multigraph sub{graph_.vertex_count, {}};
    sub.edges.reserve(edges.size());
    for (std::size_t e : edges) sub.edges.push_back(graph_.edges[e]);
    const Orientation orient = euler_orient(sub);
    EdgeList first, second;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      (side_[orient.arcs[i].tail] == 0 ? first : second).push_back(edges[i]);
    }
    return {std::move(first), std::move(second)};
  }

  Matching perfect_matching(const EdgeList& edges) {
    const std::size_t nv = graph_.vertex_count;
    adj_.assign(nv, {});
    for (std::size_t e : edges) {
      auto [a, b] = graph_.edges[e];
      if (side_[a] != 0) std::swap(a, b);
      adj_[a].push_back({e, b});
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    match_left_.assign(nv, kNone);
    match_right_.assign(nv, kNone);

    // Greedy maximal matching, then augment from every exposed left vertex.
    for (std::size_t v = 0; v < nv; ++v) {
      if (side_[v] != 0) continue;
      for (const auto& [e, w] : adj_[v]) {
        if (match_right_[w] == kNone) {
          match_left_[v] = e;
          match_right_[w] = e;
          break;
        }
      }
    }
    stamp_.assign(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
      if (side_[v] != 0 || match_left_[v] != kNone || adj_[v].empty()) {
        continue;
      }
      ++round_;
      if (!augment(v)) {
        throw Error(ErrorCode::kNotRegular,
                    "no perfect matching; graph is not regular bipartite");
      }
    }
    Matching m;
    for (std::size_t v = 0; v < nv; ++v) {
      if (side_[v] == 0 && match_left_[v] != kNone) {
        m.push_back(match_left_[v]);
      }
    }
    std::sort(m.begin(), m.end());
    return m;
  }

  bool augment(std::size_t left) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    for (const auto& [e, w] : adj_[left]) {
      if (stamp_[w] == round_) continue;
      stamp_[w] = round_;
      const std::size_t held = match_right_[w];
      std::size_t owner = kNone;
      if (held != kNone) {
        const auto& [a, b] = graph_.edges[held];
        owner = side_[a] == 0 ? a : b;
      }
      if (held == kNone || augment(owner)) {
        match_left_[left] = e;
        match_right_[w] = e;
        return true;
      }
    }
    return false;
  }

  struct Incidence {
    std::size_t edge;
    std::size_t right;
  };

  const Multigraph& graph_;
  std::vector<int> side_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<unsigned> stamp_;
  unsigned round_ = 0;
};

}  // namespace

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

std::vector<int> Orientation::in_degrees(std::size_t vertex_count) const {
  std::vector<int> deg(vertex_count, 0);
  for (const Arc& arc : arcs) ++deg[arc.head];
  return deg;
}

std::vector<int> Orientation::out_degrees(std::size_t vertex_count) const {
  std::vector<int> deg(vertex_count, 0);
  for (const Arc& arc : arcs) ++deg[arc.tail];
  return deg;
}

Orientation euler_orient(const Multigraph& graph) {
  const auto deg = graph.degrees();
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] % 2 != 0) {
      throw Error(ErrorCode::kOddDegree,
                  "vertex " + std::to_string(v) + " has odd degree " +
                      std::to_string(deg[v]));
    }
  }

  // A loop appears twice in its vertex's list; the second visit is skipped.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(
      graph.vertex_count);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [a, b] = graph.edges[e];
    adj[a].push_back({e, b});
    adj[b].push_back({e, a});
  }

  Orientation orient;
  orient.arcs.resize(graph.edges.size());
  std::vector<bool> used(graph.edges.size(), false);
  std::vector<std::size_t> next(graph.vertex_count, 0);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < graph.vertex_count; ++start) {
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      auto& cursor = next[v];
      while (cursor < adj[v].size() && used[adj[v][cursor].first]) ++cursor;
      if (cursor == adj[v].size()) {
        stack.pop_back();
        continue;
      }
      const auto [e, w] = adj[v][cursor];
      used[e] = true;
      orient.arcs[e] = {v, w};
      stack.push_back(w);
    }
  }
  return orient;
}

std::vector<TwoFactor> two_factorization(const Multigraph& graph, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative k");
  require_regular(graph, 2 * k);
  if (k == 0) return {};

  const Orientation orient = euler_orient(graph);
  const std::size_t nv = graph.vertex_count;
  Multigraph cover{2 * nv, {}};
  cover.edges.reserve(graph.edges.size());
  for (const Arc& arc : orient.arcs) cover.edges.push_back({arc.tail, nv + arc.head});

  std::vector<TwoFactor> factors;
  for (Matching& m : bipartite_matching_decomposition(cover, k)) {
    factors.push_back(TwoFactor{std::move(m)});
  }
  return factors;
}

std::vector<Matching> bipartite_matching_decomposition(const Multigraph& graph,
                                                       int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative k");
  std::vector<int> side = two_color(graph);
  require_regular(graph, k);
  EdgeList all(graph.edges.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<Matching> out;
  out.reserve(k);
  BipartiteDecomposer(graph, std::move(side)).decompose(std::move(all), k, out);
  return out;
}

LayerAssignment group_factors(std::span<const TwoFactor> factors, int q, int t,
                              std::optional<std::uint64_t> shuffle_seed) {
  if (q < 2 || q % 2 != 0 || t < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grouping needs an even q >= 2 and t >= 1");
  }
  const std::size_t expected =
      static_cast<std::size_t>(t) * static_cast<std::size_t>(q) / 2;
  if (factors.size() != expected) {
    throw Error(ErrorCode::kWrongFactorCount,
                "expected " + std::to_string(expected) + " factors, got " +
                    std::to_string(factors.size()));
  }
  std::vector<std::size_t> order(factors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  std::size_t edge_total = 0;
  for (const TwoFactor& f : factors) {
    for (std::size_t e : f.edge_ids) edge_total = std::max(edge_total, e + 1);
  }
  LayerAssignment assign{t, std::vector<int>(edge_total, -1)};
  const std::size_t per_layer = static_cast<std::size_t>(q / 2);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int layer = static_cast<int>(pos / per_layer);
    for (std::size_t e : factors[order[pos]].edge_ids) {
      assign.layer_of_edge[e] = layer;
    }
  }
  return assign;
}

int max_layer_degree(const Multigraph& graph, const LayerAssignment& assign) {
  const std::size_t nv = graph.vertex_count;
  std::vector<int> deg(nv * static_cast<std::size_t>(assign.layer_count), 0);
  int best = 0;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const int layer = e < assign.layer_of_edge.size() ? assign.layer_of_edge[e]
                                                      : -1;
    if (layer < 0) continue;
    const auto [a, b] = graph.edges[e];
    const std::size_t base = static_cast<std::size_t>(layer) * nv;
    best = std::max(best, ++deg[base + a]);
    best = std::max(best, ++deg[base + b]);
  }
  return best;
}

}  // namespace gridpair
