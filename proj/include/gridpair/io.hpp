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

#ifndef GRIDPAIR_IO_HPP
#define GRIDPAIR_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gridpair/demand.hpp"
#include "gridpair/router.hpp"
#include "gridpair/verify.hpp"

namespace gridpair {

// Instance file:
//   GRID t n
//   DEMANDS m
//   id c1 .. cn d1 .. dn    (m lines)
void write_instance(std::ostream& os, const DemandGraph& demands);
DemandGraph read_instance(std::istream& is);

// Routing file:
//   ROUTING m
//   id len v0 | v1 | ... | v_len   (each vertex as n coordinates)
void write_routing(std::ostream& os, const Routing& routing);

struct RoutingFile {
  std::size_t declared_count = 0;
  Routing routing;
};

/// Reads every trail line present, even when the count disagrees with the
/// header, so that the verifier can report what is wrong with it.
RoutingFile read_routing(std::istream& is, const GridSpec& spec);

std::string instance_to_string(const DemandGraph& demands);
DemandGraph instance_from_string(std::string_view text);
std::string routing_to_string(const Routing& routing);
Routing routing_from_string(std::string_view text, const GridSpec& spec);

/// Uniformly random perfect matching of all t^n vertices. Throws
/// Error(kInvalidArgument) when t^n is odd.
DemandGraph generate_pairing(const GridSpec& spec, std::uint64_t seed);

/// q rounds of random matchings on vertices still below degree q; the max
/// degree is exactly q. Without `unchecked`, q must be even and within
/// floor(t/6)-1 (Error(kInfeasibleBudget)).
DemandGraph generate_multigraph(const GridSpec& spec, int q,
                                std::uint64_t seed, bool unchecked = false);

std::string report_to_text(const GridSpec& spec,
                           const VerificationReport& report);
nlohmann::json report_to_json(const GridSpec& spec,
                              const VerificationReport& report);

}  // namespace gridpair

#endif  // GRIDPAIR_IO_HPP
