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

#include "gridpair/router.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>

#include "gridpair/error.hpp"

namespace gridpair {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vertex strip_last(const Vertex& v) { return column_of(v); }

Vertex last_only(const Vertex& v) { return Vertex{v.coords.back()}; }

// Runs fn(0..count-1) on up to `jobs` threads. Exceptions are collected per
// index and the lowest-index one is rethrown, so failures are reported the
// same way regardless of scheduling.
void run_tasks(std::size_t count, unsigned jobs,
               const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  auto guarded = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(std::max(jobs, 1u), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) guarded(i);
      });
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

void merge_stats(SolveStats& into, const SolveStats& from) {
  into.max_layer_degree = std::max(into.max_layer_degree, from.max_layer_degree);
  into.max_column_degree =
      std::max(into.max_column_degree, from.max_column_degree);
  into.layer_subproblems += from.layer_subproblems;
  into.column_subproblems += from.column_subproblems;
  into.base_solves += from.base_solves;
}

const Trail& trail_at(const Routing& routing, const SubRef& ref) {
  const auto local = static_cast<std::size_t>(ref.local);
  if (local >= routing.trails.size() || routing.trails[local].id != ref.local) {
    throw Error(ErrorCode::kInvalidArgument,
                "subproblem routing is missing local demand " +
                    std::to_string(ref.local));
  }
  return routing.trails[local].trail;
}

class Engine {
 public:
  explicit Engine(const SolveOptions& options) : options_(options) {}

  Routing route(const GridSpec& spec, std::span<const DemandEdge> demands,
                int q, std::uint64_t seed, unsigned jobs, SolveStats& stats) {
    if (demands.empty()) return {};
    if (spec.n() == 1) {
      ++stats.base_solves;
      CompleteSolveOptions base;
      base.seed = seed;
      return solve_complete(spec.t(), demands, base);
    }

    const int t = spec.t();
    const DemandSplit split = split_demands(demands);
    const AuxGraph aux = regularize(project(split.cross_column, spec), t * q);

    Multigraph graph{aux.base.vertex_count(), {}};
    graph.edges.reserve(aux.edges.size());
    for (const AuxEdge& e : aux.edges) graph.edges.push_back({e.a, e.b});
    const auto factors = two_factorization(graph, t * q / 2);
    std::optional<std::uint64_t> shuffle;
    if (options_.shuffle_factors) shuffle = derive_seed(seed, 1, 0);
    const LayerAssignment assign = group_factors(factors, q, t, shuffle);

    const Subproblems subs = build_subproblems(spec, demands, q, aux, assign);
    stats.max_layer_degree = std::max(stats.max_layer_degree, subs.max_layer_degree);
    stats.max_column_degree =
        std::max(stats.max_column_degree, subs.max_column_degree);
    stats.layer_subproblems += subs.layers.size();
    stats.column_subproblems += subs.columns.size();

    const GridSpec layer_spec(t, spec.n() - 1);
    const std::size_t n_layers = subs.layers.size();
    std::vector<Routing> solved(n_layers + subs.columns.size());
    std::vector<SolveStats> task_stats(solved.size());
    run_tasks(solved.size(), jobs, [&](std::size_t i) {
      if (i < n_layers) {
        solved[i] = route(layer_spec, subs.layers[i].demands, q,
                          derive_seed(seed, 2, i), 1, task_stats[i]);
        return;
      }
      const auto& column = subs.columns[i - n_layers].demands;
      if (column.empty()) return;
      ++task_stats[i].base_solves;
      CompleteSolveOptions base;
      base.seed = derive_seed(seed, 3, i - n_layers);
      solved[i] = solve_complete(t, column, base);
    });
    for (const SolveStats& s : task_stats) merge_stats(stats, s);

    auto column_trail = [&](const SubRef& ref) {
      return embed_in_column(subs.columns[ref.subproblem].column,
                             trail_at(solved[n_layers + ref.subproblem], ref));
    };

    Routing out;
    out.trails.reserve(subs.plan.size());
    for (const DemandPlan& plan : subs.plan) {
      if (!plan.rewritten) {
        out.trails.push_back({plan.original_id, column_trail(*plan.column_u)});
        continue;
      }
      const RewrittenDemand& r = *plan.rewritten;
      const Trail cu = plan.column_u ? column_trail(*plan.column_u)
                                     : Trail{{r.middle.u}};
      const Trail cv = plan.column_v ? column_trail(*plan.column_v)
                                     : Trail{{r.middle.v}};
      const Trail mid = lift_trail(
          trail_at(solved[plan.layer->subproblem], *plan.layer), r.layer, t);
      out.trails.push_back({plan.original_id, stitch(r, cu, mid, cv)});
    }
    std::sort(out.trails.begin(), out.trails.end(),
              [](const RoutedTrail& a, const RoutedTrail& b) {
                return a.id < b.id;
              });
    return out;
  }

 private:
  const SolveOptions& options_;
};

}  // namespace

const Trail* Routing::find(DemandId id) const {
  for (const RoutedTrail& rt : trails) {
    if (rt.id == id) return &rt.trail;
  }
  return nullptr;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag,
                          std::uint64_t index) {
  return splitmix64(base ^ splitmix64(tag * 0x100000001b3ULL ^
                                      splitmix64(index)));
}

RewrittenDemand rewrite(const DemandEdge& demand, int k) {
  if (k < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "negative layer index " + std::to_string(k));
  }
  const Vertex a = column_of(demand.u);
  const Vertex b = column_of(demand.v);
  if (a == b) {
    throw Error(ErrorCode::kInvalidArgument,
                "demand " + std::to_string(demand.id) +
                    " is not a cross-column demand");
  }
  Vertex a_k = demand.u;
  a_k.coords.back() = k;
  Vertex b_k = demand.v;
  b_k.coords.back() = k;

  RewrittenDemand out;
  out.original_id = demand.id;
  out.layer = k;
  if (layer_of(demand.u) != k) {
    out.connector_u = DemandEdge{demand.id, demand.u, a_k};
  }
  out.middle = DemandEdge{demand.id, a_k, b_k};
  if (layer_of(demand.v) != k) {
    out.connector_v = DemandEdge{demand.id, b_k, demand.v};
  }
  return out;
}

Subproblems build_subproblems(const GridSpec& spec,
                              std::span<const DemandEdge> demands, int q,
                              const AuxGraph& aux,
                              const LayerAssignment& assign) {
  if (spec.n() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "subproblems need a grid of dimension >= 2");
  }
  const int t = spec.t();
  std::unordered_map<DemandId, int> layer_of_demand;
  for (std::size_t e = 0; e < aux.edges.size(); ++e) {
    if (aux.edges[e].is_dummy()) continue;
    if (e >= assign.layer_of_edge.size() || assign.layer_of_edge[e] < 0 ||
        assign.layer_of_edge[e] >= t) {
      throw Error(ErrorCode::kClaimViolation,
                  "auxiliary edge " + std::to_string(e) + " has no layer");
    }
    layer_of_demand[*aux.edges[e].origin] = assign.layer_of_edge[e];
  }

  Subproblems subs;
  subs.layers.resize(t);
  for (int k = 0; k < t; ++k) subs.layers[k].k = k;
  const std::uint64_t n_columns = aux.base.vertex_count();
  subs.columns.resize(n_columns);
  for (std::uint64_t c = 0; c < n_columns; ++c) {
    subs.columns[c].column = vertex_at(aux.base, c);
  }

  auto add_column = [&](const DemandEdge& d) {
    const std::uint64_t c = vertex_rank(aux.base, column_of(d.u));
    auto& bucket = subs.columns[c].demands;
    const auto local = static_cast<DemandId>(bucket.size());
    bucket.push_back({local, last_only(d.u), last_only(d.v)});
    return SubRef{c, local};
  };

  subs.plan.reserve(demands.size());
  for (const DemandEdge& d : demands) {
    DemandPlan plan;
    plan.original_id = d.id;
    if (column_of(d.u) == column_of(d.v)) {
      plan.column_u = add_column(d);
      subs.plan.push_back(std::move(plan));
      continue;
    }
    const auto found = layer_of_demand.find(d.id);
    if (found == layer_of_demand.end()) {
      throw Error(ErrorCode::kClaimViolation,
                  "cross-column demand " + std::to_string(d.id) +
                      " was not assigned a layer");
    }
    RewrittenDemand r = rewrite(d, found->second);
    if (r.connector_u) plan.column_u = add_column(*r.connector_u);
    auto& layer = subs.layers[r.layer].demands;
    const auto local = static_cast<DemandId>(layer.size());
    layer.push_back({local, strip_last(r.middle.u), strip_last(r.middle.v)});
    plan.layer = SubRef{static_cast<std::size_t>(r.layer), local};
    if (r.connector_v) plan.column_v = add_column(*r.connector_v);
    plan.rewritten = std::move(r);
    subs.plan.push_back(std::move(plan));
  }

  for (const auto& layer : subs.layers) {
    const int deg = max_demand_degree(layer.demands);
    subs.max_layer_degree = std::max(subs.max_layer_degree, deg);
    if (deg > q) {
      throw Error(ErrorCode::kClaimViolation,
                  "layer " + std::to_string(layer.k) + " has demand degree " +
                      std::to_string(deg) + " > q=" + std::to_string(q));
    }
  }
  for (const auto& column : subs.columns) {
    const int deg = max_demand_degree(column.demands);
    subs.max_column_degree = std::max(subs.max_column_degree, deg);
    if (deg > 2 * q) {
      throw Error(ErrorCode::kClaimViolation,
                  "column " + to_string(column.column) +
                      " has demand degree " + std::to_string(deg) +
                      " > 2q=" + std::to_string(2 * q));
    }
  }
  return subs;
}

Trail stitch(const RewrittenDemand& rewritten, const Trail& connector_u,
             const Trail& middle, const Trail& connector_v) {
  for (const Trail* piece : {&connector_u, &middle, &connector_v}) {
    if (piece->vertices.empty()) {
      throw Error(ErrorCode::kEndpointMismatch, "empty trail piece");
    }
  }
  if (connector_u.front() != rewritten.u() ||
      connector_u.back() != middle.front() ||
      middle.back() != connector_v.front() ||
      connector_v.back() != rewritten.v()) {
    throw Error(ErrorCode::kEndpointMismatch,
                "pieces of demand " + std::to_string(rewritten.original_id) +
                    " do not chain from " + to_string(rewritten.u()) +
                    " to " + to_string(rewritten.v()));
  }
  Trail out = connector_u;
  out.vertices.insert(out.vertices.end(), middle.vertices.begin() + 1,
                      middle.vertices.end());
  out.vertices.insert(out.vertices.end(), connector_v.vertices.begin() + 1,
                      connector_v.vertices.end());
  return out;
}

Trail shortcut_trail(const Trail& trail) {
  Trail out;
  std::map<Vertex, std::size_t> position;
  for (const Vertex& v : trail.vertices) {
    const auto found = position.find(v);
    if (found == position.end()) {
      position.emplace(v, out.vertices.size());
      out.vertices.push_back(v);
      continue;
    }
    for (std::size_t i = found->second + 1; i < out.vertices.size(); ++i) {
      position.erase(out.vertices[i]);
    }
    out.vertices.resize(found->second + 1);
  }
  return out;
}

int resolve_budget(const DemandGraph& demands, bool unchecked) {
  const int delta = demands.max_degree();
  if (demands.q != 0) {
    if (demands.q < 2 || demands.q % 2 != 0 || demands.q < delta) {
      throw Error(ErrorCode::kInvalidArgument,
                  "budget q=" + std::to_string(demands.q) +
                      " must be even, >= 2 and >= the demand degree " +
                      std::to_string(delta));
    }
    if (!unchecked && demands.q > budget_limit(demands.spec.t())) {
      throw Error(ErrorCode::kInfeasibleBudget,
                  "budget q=" + std::to_string(demands.q) +
                      " exceeds floor(t/6)-1=" +
                      std::to_string(budget_limit(demands.spec.t())));
    }
    return demands.q;
  }
  return unchecked ? smallest_even_budget(delta)
                   : choose_q(demands.spec, delta);
}

Routing solve(const DemandGraph& demands, const SolveOptions& options,
              SolveStats* stats) {
  const DemandGraph checked = make_demand_graph(demands.spec, demands.edges);
  SolveStats local;
  if (demands.edges.empty()) {
    if (stats) *stats = local;
    return {};
  }
  local.q = resolve_budget(demands, options.unchecked);
  Engine engine(options);
  Routing routing = engine.route(checked.spec, checked.edges, local.q,
                                 options.seed, options.jobs, local);
  if (options.simplify_trails) {
    for (RoutedTrail& rt : routing.trails) rt.trail = shortcut_trail(rt.trail);
  }
  if (stats) *stats = local;
  return routing;
}

}  // namespace gridpair
