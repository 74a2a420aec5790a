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

#ifndef GRIDPAIR_FACTORIZATION_HPP
#define GRIDPAIR_FACTORIZATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gridpair {

/// Undirected multigraph on vertices [0, vertex_count). Edge ids are
/// positions in `edges`; parallel edges and loops are allowed.
struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// A loop contributes 2 to its vertex.
  std::vector<int> degrees() const;
};

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
};

/// Direction of every edge, indexed by edge id.
struct Orientation {
  std::vector<Arc> arcs;

  std::vector<int> in_degrees(std::size_t vertex_count) const;
  std::vector<int> out_degrees(std::size_t vertex_count) const;
};

/// Orients every edge along an Euler circuit of its component (Hierholzer),
/// so in-degree equals out-degree everywhere. Throws Error(kOddDegree).
Orientation euler_orient(const Multigraph& graph);

/// A spanning 2-regular subgraph, by edge id.
struct TwoFactor {
  std::vector<std::size_t> edge_ids;
};

/// Splits a 2k-regular multigraph into k edge-disjoint 2-factors: orient
/// along Euler circuits, take the out/in bipartite double cover, peel k
/// perfect matchings. Throws Error(kNotRegular).
std::vector<TwoFactor> two_factorization(const Multigraph& graph, int k);

using Matching = std::vector<std::size_t>;

/// Splits a k-regular bipartite multigraph into k perfect matchings (edge
/// ids). Even k halves along Euler circuits; odd k first peels one perfect
/// matching by augmenting paths. Throws Error(kNotRegular) or
/// Error(kNotBipartite).
std::vector<Matching> bipartite_matching_decomposition(const Multigraph& graph,
                                                       int k);

/// Layer index in [0, layer_count) for every edge id of the factored graph.
struct LayerAssignment {
  int layer_count = 0;
  std::vector<int> layer_of_edge;
};

/// Groups (t*q)/2 factors into t layers of q/2 consecutive factors each.
/// With a shuffle seed the factor order is permuted first.
LayerAssignment group_factors(std::span<const TwoFactor> factors, int q, int t,
                              std::optional<std::uint64_t> shuffle_seed = {});

/// Largest degree any vertex reaches inside a single layer's edge set.
int max_layer_degree(const Multigraph& graph, const LayerAssignment& assign);

}  // namespace gridpair

#endif  // GRIDPAIR_FACTORIZATION_HPP
