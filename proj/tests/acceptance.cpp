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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridpair/demand.hpp"
#include "gridpair/error.hpp"
#include "gridpair/factorization.hpp"
#include "gridpair/grid.hpp"
#include "gridpair/io.hpp"
#include "gridpair/router.hpp"
#include "gridpair/verify.hpp"
#include "support.hpp"

using namespace gridpair;

namespace {

constexpr int kT = 18;
constexpr int kSeedsN1 = 100;
constexpr int kSeedsN2 = 100;
constexpr int kSeedsN3 = 10;
constexpr int kSeedsMultiT18 = 100;
constexpr int kSeedsMultiT30 = 20;
constexpr int kPetersenGraphs = 200;
constexpr std::size_t kPetersenMaxVertices = 200;
constexpr int kBaseInstances = 1000;
constexpr int kBaseDelta = 4;
constexpr std::size_t kBaseMaxLength = 3;
constexpr int kOracleMaxDemands = 5;
constexpr double kRatioTolerance = 0.02;
constexpr double kRatioPaper = 4.32;
constexpr double kRatioExact = 4.08;
constexpr std::uint64_t kEdgesT18N3 = 148716;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Observations gathered during the pipeline runs of criteria 1 and 2, so that
// criteria 4 and 7 judge the same runs.
struct PipelineRun {
  std::string label;
  int n = 0;
  SolveStats stats;
  std::size_t max_length = 0;
};
std::vector<PipelineRun> g_runs;

std::string describe(const VerificationReport& r) {
  if (r.violations.empty()) return "ok";
  return std::string(to_string(r.violations.front().kind)) + " x" +
         std::to_string(r.violations.size());
}

void route_and_record(const DemandGraph& demands, const std::string& label,
                      std::uint64_t seed, Outcome& out) {
  SolveOptions options;
  options.seed = seed;
  SolveStats stats;
  try {
    const Routing routing = solve(demands, options, &stats);
    const VerificationReport report = verify(demands.spec, demands, routing);
    if (!report.ok) out.fail(label + ": " + describe(report));
    g_runs.push_back({label, demands.spec.n(), stats, report.stats.max_length});
  } catch (const Error& e) {
    out.fail(label + ": " + e.what());
  }
}

Outcome criterion1() {
  Outcome out;
  const std::uint64_t enumerated = testing::enumerate_edge_count(kT, 3);
  const std::uint64_t formula = edge_count(GridSpec(kT, 3));
  if (enumerated != kEdgesT18N3 || formula != kEdgesT18N3) {
    out.fail("edge count " + std::to_string(formula) + " vs enumerated " +
             std::to_string(enumerated));
  }
  const std::pair<int, int> plan[] = {{1, kSeedsN1}, {2, kSeedsN2}, {3, kSeedsN3}};
  for (const auto& [n, seeds] : plan) {
    const GridSpec spec(kT, n);
    for (int s = 0; s < seeds; ++s) {
      const DemandGraph demands = generate_pairing(spec, 1000 + s);
      route_and_record(demands,
                       "pairing n=" + std::to_string(n) + " seed=" + std::to_string(1000 + s),
                       s, out);
    }
  }
  out.detail = out.ok ? "t=18 pairings: 100 (n=1), 100 (n=2), 10 (n=3) verified; "
                        "148716 edges enumerated"
                      : out.detail;
  return out;
}

Outcome criterion2() {
  Outcome out;
  for (int s = 0; s < kSeedsMultiT18; ++s) {
    const DemandGraph demands = generate_multigraph(GridSpec(kT, 2), 2, 2000 + s, false);
    if (demands.max_degree() != 2) out.fail("t=18 instance without max degree 2");
    route_and_record(demands, "t=18 q=2 seed=" + std::to_string(2000 + s), s, out);
  }
  for (int s = 0; s < kSeedsMultiT30; ++s) {
    const DemandGraph demands = generate_multigraph(GridSpec(30, 2), 4, 3000 + s, false);
    if (demands.max_degree() != 4) out.fail("t=30 instance without max degree 4");
    route_and_record(demands, "t=30 q=4 seed=" + std::to_string(3000 + s), s, out);
  }
  if (out.ok) out.detail = "t=18 n=2 degree 2 (100 seeds), t=30 n=2 degree 4 (20 seeds) verified";
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::mt19937_64 rng(42);
  const int ks[] = {1, 2, 3, 6};
  std::uniform_int_distribution<std::size_t> size_dist(1, kPetersenMaxVertices);
  std::size_t loops = 0, parallels = 0;
  for (int i = 0; i < kPetersenGraphs; ++i) {
    const int k = ks[i % 4];
    const std::size_t vertices = size_dist(rng);
    const Multigraph g = testing::random_regular_multigraph(vertices, 2 * k, rng);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : g.edges) {
      loops += (a == b);
      parallels += !seen.insert({std::min(a, b), std::max(a, b)}).second;
    }
    const std::string label = "graph " + std::to_string(i) + " (k=" + std::to_string(k) +
                              ", " + std::to_string(vertices) + " vertices)";
    try {
      const std::vector<TwoFactor> factors = two_factorization(g, k);
      if (factors.size() != static_cast<std::size_t>(k)) {
        out.fail(label + ": " + std::to_string(factors.size()) + " factors");
        continue;
      }
      std::vector<std::vector<std::size_t>> parts;
      for (const TwoFactor& f : factors) {
        if (!testing::all_degrees_equal(testing::degrees_of(g, f.edge_ids), 2)) {
          out.fail(label + ": factor not spanning 2-regular");
        }
        parts.push_back(f.edge_ids);
      }
      if (!testing::partitions_edges(g, parts)) out.fail(label + ": factors do not partition E");
    } catch (const Error& e) {
      out.fail(label + ": " + e.what());
    }
  }
  if (out.ok) {
    out.detail = "200 graphs factored exactly (" + std::to_string(loops) + " loops, " +
                 std::to_string(parallels) + " parallel edges seen)";
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  std::size_t layered = 0;
  for (const PipelineRun& run : g_runs) {
    const int q = run.stats.q;
    if (run.stats.max_layer_degree > q || run.stats.max_column_degree > 2 * q) {
      out.fail(run.label + ": layer " + std::to_string(run.stats.max_layer_degree) +
               ", column " + std::to_string(run.stats.max_column_degree) + ", q " +
               std::to_string(q));
    }
    layered += run.stats.layer_subproblems > 0;
  }
  if (g_runs.size() != static_cast<std::size_t>(kSeedsN1 + kSeedsN2 + kSeedsN3 +
                                                kSeedsMultiT18 + kSeedsMultiT30)) {
    out.fail("only " + std::to_string(g_runs.size()) + " pipeline runs recorded");
  }
  if (out.ok) {
    out.detail = std::to_string(g_runs.size()) + " runs (" + std::to_string(layered) +
                 " with layer subproblems): layer degree <= q, column degree <= 2q";
  }
  return out;
}

// Independent of the library verifier: walks each trail with plain pair keys.
bool check_complete_routing(int t, const std::vector<DemandEdge>& demands,
                            const Routing& routing, std::size_t max_length,
                            std::string& why) {
  if (routing.size() != demands.size()) {
    why = "trail count";
    return false;
  }
  std::set<std::pair<int, int>> used;
  std::vector<bool> seen(demands.size(), false);
  for (const RoutedTrail& rt : routing.trails) {
    if (rt.id < 0 || static_cast<std::size_t>(rt.id) >= demands.size() || seen[rt.id]) {
      why = "bad id";
      return false;
    }
    seen[rt.id] = true;
    const auto& vs = rt.trail.vertices;
    const int a = demands[rt.id].u.coords[0], b = demands[rt.id].v.coords[0];
    if (vs.size() < 2 || rt.trail.length() > max_length) {
      why = "length " + std::to_string(rt.trail.length());
      return false;
    }
    const int first = vs.front().coords[0], last = vs.back().coords[0];
    if (!((first == a && last == b) || (first == b && last == a))) {
      why = "endpoints";
      return false;
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const int x = vs[i].coords[0], y = vs[i + 1].coords[0];
      if (x == y || x < 0 || y < 0 || x >= t || y >= t ||
          !used.insert({std::min(x, y), std::max(x, y)}).second) {
        why = "edge reuse or non-edge";
        return false;
      }
    }
  }
  return true;
}

Outcome criterion5() {
  Outcome out;
  const GridSpec spec(kT, 1);
  std::size_t longest = 0;
  for (int s = 0; s < kBaseInstances; ++s) {
    const DemandGraph demands = generate_multigraph(spec, kBaseDelta, 5000 + s, true);
    const std::string label = "seed " + std::to_string(5000 + s);
    if (testing::max_of(testing::demand_degrees(demands.edges)) > kBaseDelta) {
      out.fail(label + ": generator exceeded degree 4");
      continue;
    }
    try {
      CompleteSolveOptions options;
      options.seed = s;
      const Routing routing = solve_complete(kT, demands.edges, options);
      std::string why;
      if (!check_complete_routing(kT, demands.edges, routing, kBaseMaxLength, why)) {
        out.fail(label + ": " + why);
      }
      const VerificationReport report = verify(spec, demands, routing);
      if (!report.ok) out.fail(label + ": " + describe(report));
      longest = std::max(longest, report.stats.max_length);
    } catch (const Error& e) {
      out.fail(label + ": " + e.what());
    }
  }
  if (out.ok) {
    out.detail = "1000 K_18 instances with degree 4 routed, max length " +
                 std::to_string(longest);
  }
  return out;
}

// Calls f on every multiset of up to `max_size` unordered pairs of [0, t).
void for_each_multiset(int t, int max_size,
                       const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < t; ++a) {
    for (int b = a + 1; b < t; ++b) pairs.push_back({a, b});
  }
  std::vector<std::pair<int, int>> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    f(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t i = from; i < pairs.size(); ++i) {
      current.push_back(pairs[i]);
      rec(i);
      current.pop_back();
    }
  };
  rec(0);
}

Outcome criterion6() {
  Outcome out;
  std::size_t instances = 0, feasible = 0, infeasible = 0;
  for (int t : {4, 5}) {
    const GridSpec spec(t, 1);
    for_each_multiset(t, kOracleMaxDemands, [&](const std::vector<std::pair<int, int>>& ps) {
      ++instances;
      const std::vector<DemandEdge> demands = testing::clique_demands(ps);
      const DemandGraph graph{spec, demands};
      std::string label = "K_" + std::to_string(t) + " {";
      for (auto [a, b] : ps) label += std::to_string(a) + std::to_string(b) + " ";
      label += "}";

      const std::optional<Routing> oracle = oracle_solve(spec, demands);
      if (oracle) {
        ++feasible;
        if (!verify(spec, graph, *oracle).ok) out.fail(label + ": oracle answer invalid");
      } else {
        ++infeasible;
      }

      std::optional<Routing> solved;
      try {
        solved = solve_complete(t, demands);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBaseSolverExhausted) out.fail(label + ": " + e.what());
      }
      if (solved && !verify(spec, graph, *solved).ok) out.fail(label + ": solver answer invalid");
      if (oracle && !solved) out.fail(label + ": solver missed a feasible instance");
      if (!oracle && solved) out.fail(label + ": solver claims an infeasible instance");
    });
  }
  if (out.ok) {
    out.detail = std::to_string(instances) + " instances (" + std::to_string(feasible) +
                 " feasible, " + std::to_string(infeasible) + " infeasible) agree";
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::map<int, std::size_t> worst;
  std::size_t checked = 0;
  for (const PipelineRun& run : g_runs) {
    if (run.label.rfind("pairing", 0) != 0) continue;
    ++checked;
    worst[run.n] = std::max(worst[run.n], run.max_length);
    const std::size_t bound = 6 * static_cast<std::size_t>(run.n) - 3;
    if (run.max_length > bound) {
      out.fail(run.label + ": length " + std::to_string(run.max_length) + " > " +
               std::to_string(bound));
    }
  }
  if (checked != static_cast<std::size_t>(kSeedsN1 + kSeedsN2 + kSeedsN3)) {
    out.fail("criterion 1 runs missing");
  }
  if (out.ok) {
    out.detail = "max lengths n=1: " + std::to_string(worst[1]) + "/3, n=2: " +
                 std::to_string(worst[2]) + "/9, n=3: " + std::to_string(worst[3]) + "/15";
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  const DegreeRatio r = degree_ratio(GridSpec(kT, 1));
  std::ostringstream os;
  os.precision(4);
  os << "paper convention " << r.paper_convention << ", exact " << r.exact;
  out.detail = os.str();
  if (std::abs(r.paper_convention - kRatioPaper) > kRatioTolerance ||
      std::abs(r.exact - kRatioExact) > kRatioTolerance) {
    out.ok = false;
  }
  return out;
}

#ifdef GRIDPAIR_CLI
int run_cli(const std::string& args) {
  const std::string cmd = std::string(GRIDPAIR_CLI) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
#endif

Outcome criterion9() {
  Outcome out;
#ifdef GRIDPAIR_CLI
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("gridpair_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string inst = (dir / "inst.txt").string();
  const struct {
    const char* gen;
    const char* seed;
  } cases[] = {{"--t 18 --n 3 --seed 11", "5"},
               {"--t 18 --n 2 --mode multigraph --q 2 --seed 12", "6"}};
  for (const auto& c : cases) {
    if (run_cli(std::string("gen ") + c.gen + " -o " + inst) != 0) {
      out.fail(std::string("gen failed: ") + c.gen);
      continue;
    }
    const std::string a = (dir / "a.txt").string(), b = (dir / "b.txt").string();
    const std::string base = std::string("route -q --seed ") + c.seed + " " + inst;
    if (run_cli(base + " --jobs 1 -o " + a) != 0 || run_cli(base + " --jobs 4 -o " + b) != 0) {
      out.fail(std::string("route failed: ") + c.gen);
      continue;
    }
    const std::string ra = slurp(a), rb = slurp(b);
    if (ra.empty() || ra != rb) out.fail(std::string("files differ: ") + c.gen);
  }
  fs::remove_all(dir);
  if (out.ok) out.detail = "route --jobs 1 and --jobs 4 byte-identical on 2 instances";
#else
  out.fail("built without the CLI");
#endif
  return out;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"1 pairings route and verify", criterion1},
      {"2 demand multigraphs route and verify", criterion2},
      {"3 2-factorization property suite", criterion3},
      {"4 layer and column degree claims", criterion4},
      {"5 base solver reliability", criterion5},
      {"6 oracle consistency", criterion6},
      {"7 trail length bound 6n-3", criterion7},
      {"8 degree statistic", criterion8},
      {"9 determinism across --jobs", criterion9},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = Clock::now();
    Outcome result;
    try {
      result = fn();
    } catch (const std::exception& e) {
      result.fail(std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    failures += !result.ok;
    std::printf("[%s] criterion %s: %s (%.1fs)\n", result.ok ? "PASS" : "FAIL", name,
                result.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
