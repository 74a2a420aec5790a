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

#ifndef GRIDPAIR_ROUTER_HPP
#define GRIDPAIR_ROUTER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gridpair/demand.hpp"
#include "gridpair/factorization.hpp"
#include "gridpair/grid.hpp"

namespace gridpair {

struct RoutedTrail {
  DemandId id = 0;
  Trail trail;

  friend bool operator==(const RoutedTrail&, const RoutedTrail&) = default;
};

/// Demand id -> trail. The solver emits entries sorted by id; routings read
/// from disk keep whatever order (and duplicates) the file had.
struct Routing {
  std::vector<RoutedTrail> trails;

  const Trail* find(DemandId id) const;
  std::size_t size() const { return trails.size(); }

  friend bool operator==(const Routing&, const Routing&) = default;
};

// ---------------------------------------------------------------------------
// Base case: edge-disjoint trails inside one K_t.
// ---------------------------------------------------------------------------

struct CompleteSolveOptions {
  std::uint64_t seed = 0;
  int max_restarts = 200;
  /// Exhaustive search over simple paths once greedy restarts are spent.
  bool exhaustive_fallback = true;
  int exhaustive_max_t = 8;
  std::uint64_t exhaustive_node_budget = 20'000'000;
};

/// Routes demands over K_t (vertices are 1-coordinate). Staged greedy:
/// direct edges, then 2-edge detours through the least loaded vertex, then
/// 3-edge detours; seeded restarts with a shuffled order; exhaustive
/// fallback for small t. Throws Error(kBaseSolverExhausted).
Routing solve_complete(int t, std::span<const DemandEdge> demands,
                       const CompleteSolveOptions& options = {});

// ---------------------------------------------------------------------------
// Decomposition into layer and column subproblems.
// ---------------------------------------------------------------------------

/// Replacement of a cross-column demand u=(a,i), v=(b,j) routed through
/// layer k. Endpoints are full grid coordinates.
struct RewrittenDemand {
  DemandId original_id = 0;
  int layer = 0;
  std::optional<DemandEdge> connector_u;  // (a,i)-(a,k), absent if i == k
  DemandEdge middle;                      // (a,k)-(b,k)
  std::optional<DemandEdge> connector_v;  // (b,k)-(b,j), absent if j == k

  const Vertex& u() const { return connector_u ? connector_u->u : middle.u; }
  const Vertex& v() const { return connector_v ? connector_v->v : middle.v; }
};

/// Throws Error(kInvalidArgument) when both ends share a column or k < 0.
RewrittenDemand rewrite(const DemandEdge& demand, int k);

/// Demands of one layer, over K_t^{n-1} (last coordinate stripped). Ids are
/// local positions.
struct SubproblemLayer {
  int k = 0;
  std::vector<DemandEdge> demands;
};

/// Demands of one column, over K_t (1-coordinate vertices holding the last
/// coordinate). Ids are local positions.
struct SubproblemColumn {
  Vertex column;
  std::vector<DemandEdge> demands;
};

/// Where a subdemand lives: subproblem index plus local demand id.
struct SubRef {
  std::size_t subproblem = 0;
  DemandId local = 0;
};

/// How one original demand is reassembled.
struct DemandPlan {
  DemandId original_id = 0;
  std::optional<RewrittenDemand> rewritten;  // empty for intra-column
  std::optional<SubRef> column_u;  // intra-column demands use only this
  std::optional<SubRef> layer;
  std::optional<SubRef> column_v;
};

struct Subproblems {
  std::vector<SubproblemLayer> layers;
  std::vector<SubproblemColumn> columns;
  std::vector<DemandPlan> plan;
  int max_layer_degree = 0;
  int max_column_degree = 0;
};

/// Rewrites every cross-column demand through the layer its projected H-edge
/// was assigned to, then distributes pieces. Asserts that every layer has
/// demand degree <= q and every column <= 2q; throws Error(kClaimViolation)
/// otherwise.
Subproblems build_subproblems(const GridSpec& spec,
                              std::span<const DemandEdge> demands, int q,
                              const AuxGraph& aux,
                              const LayerAssignment& assign);

/// Concatenates u->u', u'->v', v'->v (absent connectors are single-vertex
/// trails). Throws Error(kEndpointMismatch) if the pieces do not chain.
Trail stitch(const RewrittenDemand& rewritten, const Trail& connector_u,
             const Trail& middle, const Trail& connector_v);

/// Removes closed sub-walks so no vertex repeats. Keeps a subset of edges.
Trail shortcut_trail(const Trail& trail);

// ---------------------------------------------------------------------------
// Full pipeline.
// ---------------------------------------------------------------------------

struct SolveOptions {
  std::uint64_t seed = 0;
  /// Worker threads for the top-level subproblem fan-out. Output does not
  /// depend on this value.
  unsigned jobs = 1;
  /// Accept budgets above floor(t/6)-1 (best effort).
  bool unchecked = false;
  bool shuffle_factors = false;
  bool simplify_trails = false;
};

struct SolveStats {
  int q = 0;
  int max_layer_degree = 0;
  int max_column_degree = 0;
  std::size_t layer_subproblems = 0;
  std::size_t column_subproblems = 0;
  std::size_t base_solves = 0;
};

/// Routes every demand of D on pairwise edge-disjoint trails of K_t^n.
/// Throws Error(kInfeasibleBudget), Error(kBaseSolverExhausted) or
/// Error(kClaimViolation).
Routing solve(const DemandGraph& demands, const SolveOptions& options = {},
              SolveStats* stats = nullptr);

/// The budget solve() would use for D under the given options.
int resolve_budget(const DemandGraph& demands, bool unchecked);

/// Deterministic per-subproblem seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag,
                          std::uint64_t index);

}  // namespace gridpair

#endif  // GRIDPAIR_ROUTER_HPP
