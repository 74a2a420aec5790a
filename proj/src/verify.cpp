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

#include "gridpair/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_map>

#include "gridpair/error.hpp"

namespace gridpair {
namespace {

// Dense ledgers above this many edges fall back to a hash map.
constexpr std::uint64_t kDenseLedgerLimit = 1ULL << 26;

class EdgeLedger {
 public:
  explicit EdgeLedger(std::uint64_t edge_total)
      : dense_(edge_total <= kDenseLedgerLimit) {
    if (dense_) first_user_.assign(edge_total, -1);
  }

  // Returns the index of the previous user, or -1 when the edge was free.
  std::int64_t claim(std::uint64_t edge, std::int64_t user) {
    if (dense_) {
      std::int64_t& slot = first_user_[edge];
      if (slot < 0) {
        slot = user;
        ++used_;
        return -1;
      }
      return slot;
    }
    auto [it, inserted] = sparse_.try_emplace(edge, user);
    if (inserted) {
      ++used_;
      return -1;
    }
    return it->second;
  }

  std::uint64_t used() const { return used_; }

 private:
  bool dense_;
  std::vector<std::int64_t> first_user_;
  std::unordered_map<std::uint64_t, std::int64_t> sparse_;
  std::uint64_t used_ = 0;
};

bool adjacent(const Vertex& u, const Vertex& v) {
  int differing = 0;
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    if (u.coords[i] != v.coords[i]) ++differing;
  }
  return differing == 1;
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMissingDemand: return "MISSING_DEMAND";
    case ViolationKind::kUnknownDemand: return "UNKNOWN_DEMAND";
    case ViolationKind::kDuplicateDemand: return "DUPLICATE_DEMAND";
    case ViolationKind::kEmptyTrail: return "EMPTY_TRAIL";
    case ViolationKind::kInvalidVertex: return "INVALID_VERTEX";
    case ViolationKind::kEndpointMismatch: return "ENDPOINT_MISMATCH";
    case ViolationKind::kNotAnEdge: return "NOT_AN_EDGE";
    case ViolationKind::kDuplicateEdge: return "DUPLICATE_EDGE";
  }
  return "UNKNOWN";
}

DegreeRatio degree_ratio(const GridSpec& spec) {
  const double t = spec.t();
  const double log_t = std::log2(t);
  return {(t - 1.0) / log_t, t / log_t};
}

VerificationReport verify(const GridSpec& spec, const DemandGraph& demands,
                          const Routing& routing) {
  VerificationReport report;
  report.stats.total_edges = edge_count(spec);
  report.stats.length_bound = static_cast<std::size_t>(6 * spec.n() - 3);
  report.stats.ratio = degree_ratio(spec);

  std::unordered_map<DemandId, const DemandEdge*> by_id;
  for (const DemandEdge& d : demands.edges) by_id.emplace(d.id, &d);

  std::unordered_map<DemandId, int> seen;
  for (const RoutedTrail& rt : routing.trails) {
    if (++seen[rt.id] == 2) {
      report.violations.push_back(
          {ViolationKind::kDuplicateDemand, {rt.id}, std::nullopt});
    }
    if (!by_id.count(rt.id)) {
      report.violations.push_back(
          {ViolationKind::kUnknownDemand, {rt.id}, std::nullopt});
    }
  }
  for (const DemandEdge& d : demands.edges) {
    if (!seen.count(d.id)) {
      report.violations.push_back(
          {ViolationKind::kMissingDemand, {d.id}, std::nullopt});
    }
  }

  // Duplicate edges: first user per edge, then one violation per edge
  // listing every trail that touched it.
  EdgeLedger ledger(report.stats.total_edges);
  std::map<std::uint64_t, std::pair<std::pair<Vertex, Vertex>,
                                    std::vector<DemandId>>> collisions;
  for (std::size_t idx = 0; idx < routing.trails.size(); ++idx) {
    const RoutedTrail& rt = routing.trails[idx];
    const auto& vs = rt.trail.vertices;
    if (vs.empty()) {
      report.violations.push_back(
          {ViolationKind::kEmptyTrail, {rt.id}, std::nullopt});
      continue;
    }
    const bool all_valid = std::all_of(
        vs.begin(), vs.end(), [&](const Vertex& v) { return spec.contains(v); });
    if (!all_valid) {
      report.violations.push_back(
          {ViolationKind::kInvalidVertex, {rt.id}, std::nullopt});
      continue;
    }
    ++report.stats.length_histogram[rt.trail.length()];
    report.stats.max_length =
        std::max(report.stats.max_length, rt.trail.length());

    if (auto it = by_id.find(rt.id); it != by_id.end()) {
      const DemandEdge& d = *it->second;
      const bool forward = vs.front() == d.u && vs.back() == d.v;
      const bool backward = vs.front() == d.v && vs.back() == d.u;
      if (!forward && !backward) {
        report.violations.push_back({ViolationKind::kEndpointMismatch,
                                     {rt.id},
                                     std::make_pair(vs.front(), vs.back())});
      }
    }

    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      if (!adjacent(vs[i], vs[i + 1])) {
        report.violations.push_back({ViolationKind::kNotAnEdge,
                                     {rt.id},
                                     std::make_pair(vs[i], vs[i + 1])});
        continue;
      }
      const std::uint64_t e = edge_rank(spec, vs[i], vs[i + 1]);
      const std::int64_t prev =
          ledger.claim(e, static_cast<std::int64_t>(idx));
      if (prev >= 0) {
        auto& entry = collisions[e];
        if (entry.second.empty()) {
          entry.first = std::minmax(vs[i], vs[i + 1]);
          entry.second.push_back(routing.trails[prev].id);
        }
        entry.second.push_back(rt.id);
      }
    }
  }
  for (auto& [edge, entry] : collisions) {
    report.violations.push_back({ViolationKind::kDuplicateEdge,
                                 std::move(entry.second),
                                 std::move(entry.first)});
  }
  report.stats.edges_used = ledger.used();
  report.ok = report.violations.empty();
  return report;
}

namespace {

// Works on its own neighbour enumeration and (min,max) vertex-pair edge
// keys; shares nothing with the router's bookkeeping.
class Oracle {
 public:
  Oracle(const GridSpec& spec, std::span<const DemandEdge> demands)
      : spec_(spec), demands_(demands) {}

  std::optional<Routing> run() {
    trails_.resize(demands_.size());
    for (const DemandEdge& d : demands_) {
      ++pending_[d.u];
      ++pending_[d.v];
    }
    if (!degrees_ok()) return std::nullopt;
    if (!search(0)) return std::nullopt;
    Routing out;
    for (std::size_t i = 0; i < demands_.size(); ++i) {
      out.trails.push_back({demands_[i].id, trails_[i]});
    }
    std::sort(out.trails.begin(), out.trails.end(),
              [](const RoutedTrail& a, const RoutedTrail& b) {
                return a.id < b.id;
              });
    return out;
  }

 private:
  static constexpr std::size_t kMaxLength = 4;
  using Key = std::pair<Vertex, Vertex>;

  static Key key(const Vertex& a, const Vertex& b) {
    return a < b ? Key{a, b} : Key{b, a};
  }

  std::vector<Vertex> neighbours(const Vertex& v) const {
    std::vector<Vertex> out;
    for (int i = 0; i < spec_.n(); ++i) {
      for (int c = 0; c < spec_.t(); ++c) {
        if (c == v.coords[i]) continue;
        Vertex w = v;
        w.coords[i] = c;
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  int free_degree(const Vertex& v) const {
    int free = 0;
    for (const Vertex& w : neighbours(v)) free += !used_.count(key(v, w));
    return free;
  }

  bool degrees_ok() const {
    for (const auto& [v, need] : pending_) {
      if (need > free_degree(v)) return false;
    }
    return true;
  }

  void enumerate(const Vertex& at, const Vertex& target,
                 std::vector<Vertex>& walk, std::set<Key>& local,
                 std::vector<Trail>& out) const {
    if (at == target && walk.size() > 1) out.push_back(Trail{walk});
    if (walk.size() - 1 == kMaxLength) return;
    for (const Vertex& w : neighbours(at)) {
      const Key k = key(at, w);
      if (used_.count(k) || local.count(k)) continue;
      local.insert(k);
      walk.push_back(w);
      enumerate(w, target, walk, local, out);
      walk.pop_back();
      local.erase(k);
    }
  }

  bool search(std::size_t idx) {
    if (idx == demands_.size()) return true;
    const DemandEdge& d = demands_[idx];
    std::vector<Trail> options;
    std::vector<Vertex> walk{d.u};
    std::set<Key> local;
    enumerate(d.u, d.v, walk, local, options);
    std::stable_sort(options.begin(), options.end(),
                     [](const Trail& a, const Trail& b) {
                       return a.length() < b.length();
                     });
    --pending_[d.u];
    --pending_[d.v];
    for (const Trail& option : options) {
      for (std::size_t i = 0; i + 1 < option.vertices.size(); ++i) {
        used_.insert(key(option.vertices[i], option.vertices[i + 1]));
      }
      if (degrees_ok()) {
        trails_[idx] = option;
        if (search(idx + 1)) return true;
      }
      for (std::size_t i = 0; i + 1 < option.vertices.size(); ++i) {
        used_.erase(key(option.vertices[i], option.vertices[i + 1]));
      }
    }
    ++pending_[d.u];
    ++pending_[d.v];
    return false;
  }

  const GridSpec& spec_;
  std::span<const DemandEdge> demands_;
  std::set<Key> used_;
  std::map<Vertex, int> pending_;
  std::vector<Trail> trails_;
};

}  // namespace

std::optional<Routing> oracle_solve(const GridSpec& spec,
                                    std::span<const DemandEdge> demands) {
  const bool small_clique = spec.n() == 1 && spec.t() <= 8;
  const bool small_grid = spec.n() <= 2 && spec.t() <= 5;
  if (!(small_clique || small_grid) || demands.size() > 8) {
    throw Error(ErrorCode::kSizeLimit,
                "oracle handles K_t (t<=8) or t<=5, n<=2 with <=8 demands");
  }
  for (const DemandEdge& d : demands) {
    if (!spec.contains(d.u) || !spec.contains(d.v) || d.u == d.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "demand " + std::to_string(d.id) + " is malformed");
    }
  }
  return Oracle(spec, demands).run();
}

}  // namespace gridpair
