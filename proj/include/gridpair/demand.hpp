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

#ifndef GRIDPAIR_DEMAND_HPP
#define GRIDPAIR_DEMAND_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gridpair/grid.hpp"

namespace gridpair {

using DemandId = std::int64_t;

/// One requested connection between two distinct grid vertices.
struct DemandEdge {
  DemandId id = 0;
  Vertex u;
  Vertex v;

  friend bool operator==(const DemandEdge&, const DemandEdge&) = default;
};

/// The demand multigraph on V(K_t^n). `q` is the even degree budget used by
/// the router; 0 means "not chosen yet".
struct DemandGraph {
  GridSpec spec;
  std::vector<DemandEdge> edges;
  int q = 0;

  /// Largest number of demands incident to a single vertex.
  int max_degree() const;

  friend bool operator==(const DemandGraph&, const DemandGraph&) = default;
};

/// Validates endpoints (in range, distinct) and id uniqueness.
DemandGraph make_demand_graph(const GridSpec& spec,
                              std::vector<DemandEdge> edges);

/// Demands numbered 0..m-1 in input order.
DemandGraph from_pairing(const GridSpec& spec,
                         std::span<const std::pair<Vertex, Vertex>> pairs);

/// Max demand degree of an edge list over any vertex set.
int max_demand_degree(std::span<const DemandEdge> edges);

/// floor(t/6) - 1, the largest admissible budget for side length t.
int budget_limit(int t);

/// Smallest even q with q >= max(delta, 2), ignoring the upper limit.
int smallest_even_budget(int delta);

/// Like smallest_even_budget, but throws Error(kInfeasibleBudget) when the
/// result exceeds budget_limit(spec.t()).
int choose_q(const GridSpec& spec, int delta);

struct DemandSplit {
  std::vector<DemandEdge> intra_column;
  std::vector<DemandEdge> cross_column;
};

/// Partitions demands by whether both endpoints share a column.
DemandSplit split_demands(const DemandGraph& demands);
DemandSplit split_demands(std::span<const DemandEdge> edges);

/// An edge of the auxiliary graph H on V(K_t^{n-1}). Endpoints are vertex
/// ranks in `AuxGraph::base`. Dummy edges (no origin) may be loops.
struct AuxEdge {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::optional<DemandId> origin;

  bool is_dummy() const { return !origin.has_value(); }
  bool is_loop() const { return a == b; }
};

struct AuxGraph {
  GridSpec base;
  std::vector<AuxEdge> edges;

  /// Per-vertex degree; a loop counts twice.
  std::vector<int> degrees() const;
  int max_degree() const;
};

/// Projects cross-column demands of a grid with n >= 2 onto
/// K_t^{n-1} by deleting the last coordinate.
AuxGraph project(std::span<const DemandEdge> cross, const GridSpec& spec);

/// Pads H with dummy edges until every vertex has degree exactly r. Pairs
/// the two most deficient vertices first; a lone remaining deficit is filled
/// with loops. Throws Error(kInvalidArgument) if some degree exceeds r or
/// the total deficit is odd.
AuxGraph regularize(const AuxGraph& aux, int r);

}  // namespace gridpair

#endif  // GRIDPAIR_DEMAND_HPP
