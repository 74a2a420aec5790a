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

#include "gridpair/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "gridpair/error.hpp"

namespace gridpair {
namespace {

// Splits lines on whitespace; '|' always forms its own token.
class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is_, line)) {
      ++number_;
      std::string spaced;
      spaced.reserve(line.size() + 8);
      for (char c : line) {
        if (c == '|') {
          spaced += " | ";
        } else {
          spaced += c;
        }
      }
      tokens.clear();
      std::istringstream split(spaced);
      std::string tok;
      while (split >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(number_) + ": " + message);
  }

  std::int64_t integer(const std::string& token) const {
    std::int64_t value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      fail("expected an integer, got '" + token + "'");
    }
    return value;
  }

  int coordinate(const std::string& token) const {
    const std::int64_t v = integer(token);
    if (v < 0 || v > std::numeric_limits<int>::max()) {
      fail("coordinate '" + token + "' out of range");
    }
    return static_cast<int>(v);
  }

 private:
  std::istream& is_;
  int number_ = 0;
};

void write_vertex(std::ostream& os, const Vertex& v) {
  for (int c : v.coords) os << ' ' << c;
}

}  // namespace

void write_instance(std::ostream& os, const DemandGraph& demands) {
  os << "GRID " << demands.spec.t() << ' ' << demands.spec.n() << '\n';
  os << "DEMANDS " << demands.edges.size() << '\n';
  for (const DemandEdge& d : demands.edges) {
    os << d.id;
    write_vertex(os, d.u);
    write_vertex(os, d.v);
    os << '\n';
  }
}

DemandGraph read_instance(std::istream& is) {
  LineReader reader(is);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok.size() != 3 || tok[0] != "GRID") {
    reader.fail("expected header 'GRID t n'");
  }
  const std::int64_t t = reader.integer(tok[1]);
  const std::int64_t n = reader.integer(tok[2]);
  if (t < 2 || n < 1 || t > 1'000'000 || n > 64) {
    reader.fail("grid parameters out of range");
  }
  const GridSpec spec(static_cast<int>(t), static_cast<int>(n));

  if (!reader.next(tok) || tok.size() != 2 || tok[0] != "DEMANDS") {
    reader.fail("expected 'DEMANDS m'");
  }
  const std::int64_t m = reader.integer(tok[1]);
  if (m < 0) reader.fail("negative demand count");

  std::vector<DemandEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  const auto width = static_cast<std::size_t>(1 + 2 * n);
  for (std::int64_t i = 0; i < m; ++i) {
    if (!reader.next(tok)) {
      reader.fail("expected " + std::to_string(m) + " demand lines, found " +
                  std::to_string(i));
    }
    if (tok.size() != width) {
      reader.fail("demand line needs " + std::to_string(width) + " fields");
    }
    DemandEdge d;
    d.id = reader.integer(tok[0]);
    for (std::int64_t c = 0; c < n; ++c) {
      d.u.coords.push_back(reader.coordinate(tok[1 + c]));
      d.v.coords.push_back(reader.coordinate(tok[1 + n + c]));
    }
    edges.push_back(std::move(d));
  }
  if (reader.next(tok)) reader.fail("trailing content after demand lines");
  try {
    return make_demand_graph(spec, std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

void write_routing(std::ostream& os, const Routing& routing) {
  os << "ROUTING " << routing.trails.size() << '\n';
  for (const RoutedTrail& rt : routing.trails) {
    os << rt.id << ' ' << rt.trail.length();
    for (std::size_t i = 0; i < rt.trail.vertices.size(); ++i) {
      if (i) os << " |";
      write_vertex(os, rt.trail.vertices[i]);
    }
    os << '\n';
  }
}

RoutingFile read_routing(std::istream& is, const GridSpec& spec) {
  LineReader reader(is);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok.size() != 2 || tok[0] != "ROUTING") {
    reader.fail("expected header 'ROUTING m'");
  }
  const std::int64_t m = reader.integer(tok[1]);
  if (m < 0) reader.fail("negative trail count");

  RoutingFile file;
  file.declared_count = static_cast<std::size_t>(m);
  const auto n = static_cast<std::size_t>(spec.n());
  while (reader.next(tok)) {
    if (tok.size() < 2) reader.fail("trail line needs 'id len ...'");
    RoutedTrail rt;
    rt.id = reader.integer(tok[0]);
    const std::int64_t len = reader.integer(tok[1]);
    if (len < 0) reader.fail("negative trail length");
    std::vector<int> coords;
    for (std::size_t i = 2; i <= tok.size(); ++i) {
      if (i == tok.size() || tok[i] == "|") {
        if (coords.size() != n) {
          reader.fail("vertex needs " + std::to_string(n) + " coordinates");
        }
        rt.trail.vertices.emplace_back(std::move(coords));
        coords.clear();
        continue;
      }
      coords.push_back(reader.coordinate(tok[i]));
    }
    if (rt.trail.vertices.size() != static_cast<std::size_t>(len) + 1) {
      reader.fail("trail length " + std::to_string(len) + " but " +
                  std::to_string(rt.trail.vertices.size()) + " vertices");
    }
    file.routing.trails.push_back(std::move(rt));
  }
  return file;
}

std::string instance_to_string(const DemandGraph& demands) {
  std::ostringstream os;
  write_instance(os, demands);
  return os.str();
}

DemandGraph instance_from_string(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_instance(is);
}

std::string routing_to_string(const Routing& routing) {
  std::ostringstream os;
  write_routing(os, routing);
  return os.str();
}

Routing routing_from_string(std::string_view text, const GridSpec& spec) {
  std::istringstream is{std::string(text)};
  return read_routing(is, spec).routing;
}

DemandGraph generate_pairing(const GridSpec& spec, std::uint64_t seed) {
  const std::uint64_t count = spec.vertex_count();
  if (count % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "a perfect pairing needs an even vertex count, t^n = " +
                    std::to_string(count));
  }
  std::vector<std::uint64_t> order(count);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<DemandEdge> edges;
  edges.reserve(count / 2);
  for (std::uint64_t i = 0; i < count; i += 2) {
    edges.push_back({static_cast<DemandId>(i / 2), vertex_at(spec, order[i]),
                     vertex_at(spec, order[i + 1])});
  }
  return make_demand_graph(spec, std::move(edges));
}

DemandGraph generate_multigraph(const GridSpec& spec, int q,
                                std::uint64_t seed, bool unchecked) {
  if (q < 1) throw Error(ErrorCode::kInvalidArgument, "q must be positive");
  if (!unchecked) {
    if (q % 2 != 0) {
      throw Error(ErrorCode::kInvalidArgument, "q must be even");
    }
    if (q > budget_limit(spec.t())) {
      throw Error(ErrorCode::kInfeasibleBudget,
                  "q=" + std::to_string(q) + " exceeds floor(t/6)-1=" +
                      std::to_string(budget_limit(spec.t())));
    }
  }
  const std::uint64_t count = spec.vertex_count();
  std::vector<int> degree(count, 0);
  std::mt19937_64 rng(seed);
  std::vector<DemandEdge> edges;
  std::vector<std::uint64_t> open;
  for (int round = 0; round < q; ++round) {
    open.clear();
    for (std::uint64_t v = 0; v < count; ++v) {
      if (degree[v] < q) open.push_back(v);
    }
    std::shuffle(open.begin(), open.end(), rng);
    for (std::size_t i = 0; i + 1 < open.size(); i += 2) {
      ++degree[open[i]];
      ++degree[open[i + 1]];
      edges.push_back({static_cast<DemandId>(edges.size()),
                       vertex_at(spec, open[i]), vertex_at(spec, open[i + 1])});
    }
  }
  return make_demand_graph(spec, std::move(edges));
}

std::string report_to_text(const GridSpec& spec,
                           const VerificationReport& report) {
  std::ostringstream os;
  if (report.ok) {
    os << "verification: OK\n";
  } else {
    os << "verification: FAILED (" << report.violations.size()
       << " violations)\n";
  }
  for (const Violation& v : report.violations) {
    os << "  " << to_string(v.kind) << " demand";
    if (v.demands.size() > 1) os << 's';
    for (std::size_t i = 0; i < v.demands.size(); ++i) {
      os << (i ? "," : " ") << v.demands[i];
    }
    if (v.edge) {
      os << " edge " << to_string(v.edge->first) << '-'
         << to_string(v.edge->second);
    }
    os << '\n';
  }
  const StatsBlock& s = report.stats;
  os << "grid: K_" << spec.t() << "^" << spec.n() << '\n';
  os << "trail length histogram (length: count):\n";
  for (const auto& [length, count] : s.length_histogram) {
    os << "  " << length << ": " << count << '\n';
  }
  os << "max trail length: " << s.max_length << " (bound 6n-3 = "
     << s.length_bound << ")\n";
  char buf[128];
  const double share =
      s.total_edges ? 100.0 * static_cast<double>(s.edges_used) /
                          static_cast<double>(s.total_edges)
                    : 0.0;
  std::snprintf(buf, sizeof buf, "%.2f", share);
  os << "edges used: " << s.edges_used << " / " << s.total_edges << " ("
     << buf << "%)\n";
  std::snprintf(buf, sizeof buf, "%.2f", s.ratio.exact);
  os << "max degree / log2 N: " << buf << " (exact, n(t-1))\n";
  std::snprintf(buf, sizeof buf, "%.2f", s.ratio.paper_convention);
  os << "max degree / log2 N: " << buf << " (paper convention, t*n)\n";
  return os.str();
}

nlohmann::json report_to_json(const GridSpec& spec,
                              const VerificationReport& report) {
  using nlohmann::json;
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json item{{"kind", to_string(v.kind)}, {"demands", v.demands}};
    if (v.edge) item["edge"] = {v.edge->first.coords, v.edge->second.coords};
    violations.push_back(std::move(item));
  }
  json histogram = json::object();
  for (const auto& [length, count] : report.stats.length_histogram) {
    histogram[std::to_string(length)] = count;
  }
  const StatsBlock& s = report.stats;
  return json{
      {"grid", {{"t", spec.t()}, {"n", spec.n()}}},
      {"ok", report.ok},
      {"violations", std::move(violations)},
      {"stats",
       {{"length_histogram", std::move(histogram)},
        {"max_length", s.max_length},
        {"length_bound", s.length_bound},
        {"edges_used", s.edges_used},
        {"total_edges", s.total_edges},
        {"degree_ratio_log2",
         {{"exact", s.ratio.exact},
          {"paper_convention", s.ratio.paper_convention}}}}}};
}

}  // namespace gridpair
