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

// gridpair: generate, route, verify and summarize edge-disjoint routings on
// complete grid graphs K_t^n.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gridpair/demand.hpp"
#include "gridpair/error.hpp"
#include "gridpair/io.hpp"
#include "gridpair/router.hpp"
#include "gridpair/verify.hpp"

namespace {

using namespace gridpair;

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,
  kExitInfeasible = 2,
  kExitExhausted = 3,
  kExitVerifyFailed = 4,
  kExitParse = 5,
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasibleBudget: return kExitInfeasible;
    case ErrorCode::kBaseSolverExhausted: return kExitExhausted;
    case ErrorCode::kParseError: return kExitParse;
    case ErrorCode::kClaimViolation:
    case ErrorCode::kEndpointMismatch: return kExitVerifyFailed;
    default: return kExitFailed;
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GRIDPAIR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable GRIDPAIR_SEED='" << env
                << "'\n";
    }
  }
  return 0;
}

DemandGraph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return read_instance(in);
}

RoutingFile load_routing(const std::string& path, const GridSpec& spec) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return read_routing(in, spec);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

struct GenArgs {
  int t = 18;
  int n = 1;
  std::string mode = "pairing";
  int q = 2;
  std::optional<std::uint64_t> seed;
  std::string out = "-";
  bool unchecked = false;
};

DemandGraph generate(const GenArgs& a, std::uint64_t seed) {
  const GridSpec spec(a.t, a.n);
  if (a.mode == "pairing") return generate_pairing(spec, seed);
  return generate_multigraph(spec, a.q, seed, a.unchecked);
}

int run_gen(const GenArgs& a) {
  write_text(a.out, instance_to_string(generate(a, resolve_seed(a.seed))));
  return kExitOk;
}

struct RouteArgs {
  std::string instance;
  std::string output = "-";
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool unchecked = false;
  bool simplify = false;
  bool shuffle_factors = false;
  bool quiet = false;
};

int run_route(const RouteArgs& a) {
  const DemandGraph demands = load_instance(a.instance);
  SolveOptions options;
  options.seed = resolve_seed(a.seed);
  options.jobs = a.jobs;
  options.unchecked = a.unchecked;
  options.simplify_trails = a.simplify;
  options.shuffle_factors = a.shuffle_factors;
  SolveStats stats;
  const Routing routing = solve(demands, options, &stats);
  const VerificationReport report = verify(demands.spec, demands, routing);
  if (!report.ok) {
    std::cerr << report_to_text(demands.spec, report);
    return kExitVerifyFailed;
  }
  write_text(a.output, routing_to_string(routing));
  if (!a.quiet) {
    std::cerr << "routed " << routing.size() << " demands on K_"
              << demands.spec.t() << "^" << demands.spec.n()
              << " with q=" << stats.q << " (max trail length "
              << report.stats.max_length << ")\n";
  }
  return kExitOk;
}

struct CheckArgs {
  std::string instance;
  std::string routing;
  bool json = false;
};

int run_check(const CheckArgs& a, bool with_stats) {
  const DemandGraph demands = load_instance(a.instance);
  const RoutingFile file = load_routing(a.routing, demands.spec);
  const VerificationReport report = verify(demands.spec, demands, file.routing);
  const bool count_ok = file.declared_count == file.routing.size();
  if (a.json) {
    nlohmann::json doc = report_to_json(demands.spec, report);
    doc["declared_trails"] = file.declared_count;
    doc["trails"] = file.routing.size();
    if (!with_stats) doc.erase("stats");
    std::cout << doc.dump(2) << '\n';
  } else {
    std::string text = report_to_text(demands.spec, report);
    if (!with_stats) text = text.substr(0, text.find("grid: "));
    std::cout << text;
    if (!count_ok) {
      std::cout << "header declares " << file.declared_count
                << " trails, file has " << file.routing.size() << '\n';
    }
  }
  return report.ok && count_ok ? kExitOk : kExitFailed;
}

struct BenchArgs {
  GenArgs gen;
  int seeds = 5;
  std::uint64_t first_seed = 0;
  unsigned jobs = 1;
};

int run_bench(const BenchArgs& a) {
  using Clock = std::chrono::steady_clock;
  int failures = 0;
  double total_ms = 0.0;
  std::cout << "seed demands q max_len ms ok\n";
  for (int i = 0; i < a.seeds; ++i) {
    const std::uint64_t seed = a.first_seed + static_cast<std::uint64_t>(i);
    const DemandGraph demands = generate(a.gen, seed);
    SolveOptions options;
    options.seed = seed;
    options.jobs = a.jobs;
    options.unchecked = a.gen.unchecked;
    SolveStats stats;
    const auto start = Clock::now();
    const Routing routing = solve(demands, options, &stats);
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    total_ms += ms;
    const VerificationReport report = verify(demands.spec, demands, routing);
    failures += !report.ok;
    std::cout << seed << ' ' << demands.edges.size() << ' ' << stats.q << ' '
              << report.stats.max_length << ' ' << ms << ' '
              << (report.ok ? "yes" : "NO") << '\n';
  }
  std::cout << "runs " << a.seeds << " failures " << failures << " mean_ms "
            << (a.seeds ? total_ms / a.seeds : 0.0) << '\n';
  return failures ? kExitVerifyFailed : kExitOk;
}

void add_gen_options(CLI::App* cmd, GenArgs& a) {
  cmd->add_option("--t", a.t, "Side length t")->required();
  cmd->add_option("--n", a.n, "Dimension n")->required();
  cmd->add_option("--mode", a.mode, "pairing or multigraph")
      ->check(CLI::IsMember({"pairing", "multigraph"}));
  cmd->add_option("--q", a.q, "Demand degree for multigraph mode");
  cmd->add_flag("--unchecked", a.unchecked,
                "Allow q outside the admissible budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint routing on complete grid graphs K_t^n"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  add_gen_options(gen_cmd, gen);
  gen_cmd->add_option("--seed", gen.seed, "Seed (default: $GRIDPAIR_SEED or 0)");
  gen_cmd->add_option("-o,--out", gen.out, "Output path, '-' for stdout");

  RouteArgs route;
  auto* route_cmd = app.add_subcommand("route", "Route an instance");
  route_cmd->add_option("instance", route.instance, "Instance file")
      ->required();
  route_cmd->add_option("-o,--output", route.output, "Routing file");
  route_cmd->add_option("--seed", route.seed, "Seed (default: $GRIDPAIR_SEED or 0)");
  route_cmd->add_option("--jobs", route.jobs, "Concurrent subproblem workers")
      ->check(CLI::PositiveNumber);
  route_cmd->add_flag("--unchecked", route.unchecked,
                      "Best effort beyond the guaranteed budget");
  route_cmd->add_flag("--simplify", route.simplify,
                      "Remove repeated vertices from trails");
  route_cmd->add_flag("--shuffle-factors", route.shuffle_factors,
                      "Seeded shuffle of 2-factors before layer grouping");
  route_cmd->add_flag("-q,--quiet", route.quiet, "No summary on stderr");

  CheckArgs check;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a routing");
  auto* stats_cmd = app.add_subcommand("stats", "Verify and summarize a routing");
  for (auto* cmd : {verify_cmd, stats_cmd}) {
    cmd->add_option("instance", check.instance, "Instance file")->required();
    cmd->add_option("routing", check.routing, "Routing file")->required();
    cmd->add_flag("--json", check.json, "Machine-readable report");
  }

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time generate+route+verify");
  add_gen_options(bench_cmd, bench.gen);
  bench_cmd->add_option("--seeds", bench.seeds, "Number of seeds");
  bench_cmd->add_option("--first-seed", bench.first_seed, "First seed");
  bench_cmd->add_option("--jobs", bench.jobs, "Concurrent subproblem workers")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*route_cmd) return run_route(route);
    if (*verify_cmd) return run_check(check, false);
    if (*stats_cmd) return run_check(check, true);
    if (*bench_cmd) return run_bench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitFailed;
}
