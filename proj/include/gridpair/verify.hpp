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

#ifndef GRIDPAIR_VERIFY_HPP
#define GRIDPAIR_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridpair/demand.hpp"
#include "gridpair/grid.hpp"
#include "gridpair/router.hpp"

namespace gridpair {

enum class ViolationKind {
  kMissingDemand,
  kUnknownDemand,
  kDuplicateDemand,
  kEmptyTrail,
  kInvalidVertex,
  kEndpointMismatch,
  kNotAnEdge,
  kDuplicateEdge,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<DemandId> demands;
  std::optional<std::pair<Vertex, Vertex>> edge;
};

/// Max degree of K_t^n divided by log2(t^n), under the exact degree n(t-1)
/// and under the rounder t*n convention.
struct DegreeRatio {
  double exact = 0.0;
  double paper_convention = 0.0;
};

DegreeRatio degree_ratio(const GridSpec& spec);

struct StatsBlock {
  std::map<std::size_t, std::size_t> length_histogram;
  std::size_t max_length = 0;
  /// 6n - 3: the longest trail the recursion can produce when every base
  /// solve uses trails of length <= 3.
  std::size_t length_bound = 0;
  std::uint64_t edges_used = 0;
  std::uint64_t total_edges = 0;
  DegreeRatio ratio;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
  StatsBlock stats;
};

/// Checks a routing from scratch: every demand covered exactly once, every
/// trail joins its demand's endpoints along grid edges, and no grid edge is
/// used twice anywhere. Never throws on malformed routings.
VerificationReport verify(const GridSpec& spec, const DemandGraph& demands,
                          const Routing& routing);

/// Exhaustive search for an edge-disjoint trail system (trails of length
/// <= 4). Only for tiny instances: K_t with t <= 8, or t <= 5 and n <= 2,
/// with at most 8 demands; Error(kSizeLimit) otherwise.
std::optional<Routing> oracle_solve(const GridSpec& spec,
                                    std::span<const DemandEdge> demands);

}  // namespace gridpair

#endif  // GRIDPAIR_VERIFY_HPP
