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

// Test-only generators and independent checkers. Nothing here calls into the
// code paths it is used to check.

#ifndef GRIDPAIR_TESTS_SUPPORT_HPP
#define GRIDPAIR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gridpair/demand.hpp"
#include "gridpair/factorization.hpp"
#include "gridpair/grid.hpp"

namespace gridpair::testing {

/// Configuration model: every vertex gets `degree` stubs, stubs are paired
/// at random. Produces loops and parallel edges.
inline Multigraph random_regular_multigraph(std::size_t vertices, int degree,
                                            std::mt19937_64& rng) {
  std::vector<std::size_t> stubs;
  for (std::size_t v = 0; v < vertices; ++v) {
    for (int i = 0; i < degree; ++i) stubs.push_back(v);
  }
  std::shuffle(stubs.begin(), stubs.end(), rng);
  Multigraph g{vertices, {}};
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    g.edges.push_back({stubs[i], stubs[i + 1]});
  }
  return g;
}

/// Union of k random perfect matchings between [0, side) and [side, 2 side).
inline Multigraph random_regular_bipartite(std::size_t side, int k,
                                           std::mt19937_64& rng) {
  Multigraph g{2 * side, {}};
  std::vector<std::size_t> perm(side);
  for (int i = 0; i < k; ++i) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t l = 0; l < side; ++l) g.edges.push_back({l, side + perm[l]});
  }
  return g;
}

inline std::vector<int> degrees_of(const Multigraph& g,
                                   const std::vector<std::size_t>& edge_ids) {
  std::vector<int> deg(g.vertex_count, 0);
  for (std::size_t e : edge_ids) {
    ++deg[g.edges[e].first];
    ++deg[g.edges[e].second];
  }
  return deg;
}

/// Every edge id appears in exactly one part.
inline bool partitions_edges(const Multigraph& g,
                             const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<int> hits(g.edges.size(), 0);
  for (const auto& part : parts) {
    for (std::size_t e : part) {
      if (e >= hits.size()) return false;
      ++hits[e];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

inline bool all_degrees_equal(const std::vector<int>& deg, int value) {
  return std::all_of(deg.begin(), deg.end(), [value](int d) { return d == value; });
}

/// Counts unordered vertex pairs of K_t^n that differ in exactly one
/// coordinate by walking every vertex's neighbourhood.
inline std::uint64_t enumerate_edge_count(int t, int n) {
  std::uint64_t vertices = 1;
  for (int i = 0; i < n; ++i) vertices *= static_cast<std::uint64_t>(t);
  std::uint64_t half_edges = 0;
  std::vector<int> coords(n, 0);
  for (std::uint64_t r = 0; r < vertices; ++r) {
    std::uint64_t x = r;
    for (int i = n - 1; i >= 0; --i) {
      coords[i] = static_cast<int>(x % t);
      x /= t;
    }
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < t; ++c) half_edges += (c != coords[i]);
    }
  }
  return half_edges / 2;
}

/// Demand degree per vertex, recomputed without the library helper.
inline std::map<std::vector<int>, int> demand_degrees(
    const std::vector<DemandEdge>& edges) {
  std::map<std::vector<int>, int> deg;
  for (const DemandEdge& d : edges) {
    ++deg[d.u.coords];
    ++deg[d.v.coords];
  }
  return deg;
}

inline int max_of(const std::map<std::vector<int>, int>& deg) {
  int best = 0;
  for (const auto& [v, d] : deg) best = std::max(best, d);
  return best;
}

inline std::vector<DemandEdge> clique_demands(
    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<DemandEdge> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.push_back({static_cast<DemandId>(i), Vertex{pairs[i].first},
                   Vertex{pairs[i].second}});
  }
  return out;
}

}  // namespace gridpair::testing

#endif  // GRIDPAIR_TESTS_SUPPORT_HPP
