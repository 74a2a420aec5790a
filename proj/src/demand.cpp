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

#include "gridpair/demand.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "gridpair/error.hpp"

namespace gridpair {

int DemandGraph::max_degree() const { return max_demand_degree(edges); }

DemandGraph make_demand_graph(const GridSpec& spec,
                              std::vector<DemandEdge> edges) {
  std::unordered_set<DemandId> ids;
  for (const DemandEdge& d : edges) {
    for (const Vertex* x : {&d.u, &d.v}) {
      if (x->dimension() != static_cast<std::size_t>(spec.n())) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "demand " + std::to_string(d.id) + " endpoint " +
                        to_string(*x) + " has wrong dimension");
      }
      if (!spec.contains(*x)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "demand " + std::to_string(d.id) + " endpoint " +
                        to_string(*x) + " out of range");
      }
    }
    if (d.u == d.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "demand " + std::to_string(d.id) + " joins " +
                      to_string(d.u) + " to itself");
    }
    if (!ids.insert(d.id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate demand id " + std::to_string(d.id));
    }
  }
  return DemandGraph{spec, std::move(edges), 0};
}

DemandGraph from_pairing(const GridSpec& spec,
                         std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<DemandEdge> edges;
  edges.reserve(pairs.size());
  DemandId next = 0;
  for (const auto& [u, v] : pairs) edges.push_back({next++, u, v});
  return make_demand_graph(spec, std::move(edges));
}

int max_demand_degree(std::span<const DemandEdge> edges) {
  std::map<Vertex, int> degree;
  int best = 0;
  for (const DemandEdge& d : edges) {
    best = std::max(best, ++degree[d.u]);
    best = std::max(best, ++degree[d.v]);
  }
  return best;
}

int budget_limit(int t) { return t / 6 - 1; }

int smallest_even_budget(int delta) {
  int q = std::max(delta, 2);
  return q % 2 == 0 ? q : q + 1;
}

int choose_q(const GridSpec& spec, int delta) {
  if (delta < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative demand degree");
  }
  const int q = smallest_even_budget(delta);
  if (q > budget_limit(spec.t())) {
    throw Error(ErrorCode::kInfeasibleBudget,
                "demand degree " + std::to_string(delta) +
                    " needs even budget q=" + std::to_string(q) +
                    " but t=" + std::to_string(spec.t()) +
                    " allows at most floor(t/6)-1=" +
                    std::to_string(budget_limit(spec.t())));
  }
  return q;
}

DemandSplit split_demands(const DemandGraph& demands) {
  return split_demands(demands.edges);
}

DemandSplit split_demands(std::span<const DemandEdge> edges) {
  DemandSplit split;
  for (const DemandEdge& d : edges) {
    if (column_of(d.u) == column_of(d.v)) {
      split.intra_column.push_back(d);
    } else {
      split.cross_column.push_back(d);
    }
  }
  return split;
}

std::vector<int> AuxGraph::degrees() const {
  std::vector<int> deg(base.vertex_count(), 0);
  for (const AuxEdge& e : edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

int AuxGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

AuxGraph project(std::span<const DemandEdge> cross, const GridSpec& spec) {
  if (spec.n() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "projection needs a grid of dimension >= 2");
  }
  AuxGraph aux{GridSpec(spec.t(), spec.n() - 1), {}};
  aux.edges.reserve(cross.size());
  for (const DemandEdge& d : cross) {
    const Vertex a = column_of(d.u);
    const Vertex b = column_of(d.v);
    if (a == b) {
      throw Error(ErrorCode::kInvalidArgument,
                  "demand " + std::to_string(d.id) +
                      " lies inside column " + to_string(a) +
                      " and cannot be projected");
    }
    aux.edges.push_back(
        {vertex_rank(aux.base, a), vertex_rank(aux.base, b), d.id});
  }
  return aux;
}

AuxGraph regularize(const AuxGraph& aux, int r) {
  AuxGraph out = aux;
  const auto deg = aux.degrees();

  // Ordered by deficit descending, then rank ascending.
  std::set<std::pair<int, std::uint64_t>> deficient;
  long long total = 0;
  for (std::uint64_t v = 0; v < deg.size(); ++v) {
    if (deg[v] > r) {
      throw Error(ErrorCode::kInvalidArgument,
                  "auxiliary vertex " + std::to_string(v) + " has degree " +
                      std::to_string(deg[v]) + " > " + std::to_string(r));
    }
    if (deg[v] < r) {
      deficient.insert({-(r - deg[v]), v});
      total += r - deg[v];
    }
  }
  if (total % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "total degree deficit is odd; no regular completion exists");
  }

  while (deficient.size() >= 2) {
    auto first = *deficient.begin();
    deficient.erase(deficient.begin());
    auto second = *deficient.begin();
    deficient.erase(deficient.begin());
    out.edges.push_back({first.second, second.second, std::nullopt});
    if (++first.first < 0) deficient.insert(first);
    if (++second.first < 0) deficient.insert(second);
  }
  if (!deficient.empty()) {
    const auto [neg_deficit, v] = *deficient.begin();
    for (int i = 0; i < -neg_deficit / 2; ++i) {
      out.edges.push_back({v, v, std::nullopt});
    }
  }
  return out;
}

}  // namespace gridpair
