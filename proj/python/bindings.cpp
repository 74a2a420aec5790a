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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "gridpair/demand.hpp"
#include "gridpair/error.hpp"
#include "gridpair/factorization.hpp"
#include "gridpair/io.hpp"
#include "gridpair/router.hpp"
#include "gridpair/verify.hpp"

namespace py = pybind11;
using namespace gridpair;

namespace {

using Coords = std::vector<int>;
using DemandTuple = std::tuple<DemandId, Coords, Coords>;

std::vector<DemandTuple> demand_tuples(const DemandGraph& d) {
  std::vector<DemandTuple> out;
  out.reserve(d.edges.size());
  for (const DemandEdge& e : d.edges) out.emplace_back(e.id, e.u.coords, e.v.coords);
  return out;
}

DemandGraph demands_from_tuples(int t, int n,
                                const std::vector<DemandTuple>& edges) {
  std::vector<DemandEdge> out;
  out.reserve(edges.size());
  for (const auto& [id, u, v] : edges) out.push_back({id, Vertex(u), Vertex(v)});
  return make_demand_graph(GridSpec(t, n), std::move(out));
}

py::dict routing_dict(const Routing& routing) {
  py::dict out;
  for (const RoutedTrail& rt : routing.trails) {
    py::list trail;
    for (const Vertex& v : rt.trail.vertices) trail.append(py::tuple(py::cast(v.coords)));
    out[py::int_(rt.id)] = trail;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge-disjoint routing on complete grid graphs K_t^n";

  py::register_exception<Error>(m, "GridpairError", PyExc_RuntimeError);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<int, int>(), py::arg("t"), py::arg("n"))
      .def_property_readonly("t", &GridSpec::t)
      .def_property_readonly("n", &GridSpec::n)
      .def("vertex_count", &GridSpec::vertex_count)
      .def("degree", &GridSpec::degree)
      .def("edge_count", [](const GridSpec& s) { return edge_count(s); })
      .def("__repr__", [](const GridSpec& s) {
        return "GridSpec(t=" + std::to_string(s.t()) + ", n=" + std::to_string(s.n()) + ")";
      });

  py::class_<DemandGraph>(m, "DemandGraph")
      .def_property_readonly("spec", [](const DemandGraph& d) { return d.spec; })
      .def_property_readonly("edges", &demand_tuples)
      .def("max_degree", &DemandGraph::max_degree)
      .def("__len__", [](const DemandGraph& d) { return d.edges.size(); })
      .def("to_text", &instance_to_string);

  py::class_<Routing>(m, "Routing")
      .def_property_readonly("trails", &routing_dict)
      .def("__len__", &Routing::size)
      .def("to_text", &routing_to_string);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("ok", &VerificationReport::ok)
      .def_property_readonly("max_length", [](const VerificationReport& r) { return r.stats.max_length; })
      .def_property_readonly("edges_used", [](const VerificationReport& r) { return r.stats.edges_used; })
      .def_property_readonly("violation_kinds", [](const VerificationReport& r) {
        std::vector<std::string> kinds;
        for (const Violation& v : r.violations) kinds.emplace_back(to_string(v.kind));
        return kinds;
      });

  m.def("make_demand_graph", &demands_from_tuples, py::arg("t"), py::arg("n"),
        py::arg("edges"), "Demands as (id, u_coords, v_coords) tuples.");
  m.def("generate_pairing",
        [](int t, int n, std::uint64_t seed) { return generate_pairing(GridSpec(t, n), seed); },
        py::arg("t"), py::arg("n"), py::arg("seed") = 0);
  m.def("generate_multigraph",
        [](int t, int n, int q, std::uint64_t seed, bool unchecked) {
          return generate_multigraph(GridSpec(t, n), q, seed, unchecked);
        },
        py::arg("t"), py::arg("n"), py::arg("q"), py::arg("seed") = 0,
        py::arg("unchecked") = false);
  m.def("read_instance", &instance_from_string, py::arg("text"));
  m.def("read_routing",
        [](const std::string& text, const GridSpec& spec) { return routing_from_string(text, spec); },
        py::arg("text"), py::arg("spec"));
  m.def("choose_q", [](int t, int delta) { return choose_q(GridSpec(t, 1), delta); },
        py::arg("t"), py::arg("delta"));

  m.def("solve",
        [](const DemandGraph& demands, std::uint64_t seed, unsigned jobs,
           bool unchecked, bool simplify, bool shuffle_factors) {
          SolveOptions options;
          options.seed = seed;
          options.jobs = jobs;
          options.unchecked = unchecked;
          options.simplify_trails = simplify;
          options.shuffle_factors = shuffle_factors;
          py::gil_scoped_release release;
          return solve(demands, options);
        },
        py::arg("demands"), py::arg("seed") = 0, py::arg("jobs") = 1,
        py::arg("unchecked") = false, py::arg("simplify") = false,
        py::arg("shuffle_factors") = false);

  m.def("verify",
        [](const DemandGraph& demands, const Routing& routing) {
          return verify(demands.spec, demands, routing);
        },
        py::arg("demands"), py::arg("routing"));

  m.def("report_json",
        [](const DemandGraph& demands, const Routing& routing) {
          return report_to_json(demands.spec, verify(demands.spec, demands, routing)).dump();
        },
        py::arg("demands"), py::arg("routing"));

  m.def("solve_complete",
        [](int t, const std::vector<std::pair<int, int>>& pairs, std::uint64_t seed) {
          std::vector<DemandEdge> demands;
          for (std::size_t i = 0; i < pairs.size(); ++i) {
            demands.push_back({static_cast<DemandId>(i), Vertex{pairs[i].first},
                               Vertex{pairs[i].second}});
          }
          CompleteSolveOptions options;
          options.seed = seed;
          std::vector<std::vector<int>> paths;
          for (const RoutedTrail& rt : solve_complete(t, demands, options).trails) {
            std::vector<int> path;
            for (const Vertex& v : rt.trail.vertices) path.push_back(v.coords[0]);
            paths.push_back(std::move(path));
          }
          return paths;
        },
        py::arg("t"), py::arg("pairs"), py::arg("seed") = 0);

  m.def("two_factorization",
        [](std::size_t vertex_count,
           const std::vector<std::pair<std::size_t, std::size_t>>& edges, int k) {
          std::vector<std::vector<std::size_t>> out;
          for (TwoFactor& f : two_factorization(Multigraph{vertex_count, edges}, k)) {
            out.push_back(std::move(f.edge_ids));
          }
          return out;
        },
        py::arg("vertex_count"), py::arg("edges"), py::arg("k"));

  m.def("degree_ratio",
        [](int t, int n) {
          const DegreeRatio r = degree_ratio(GridSpec(t, n));
          return std::make_pair(r.exact, r.paper_convention);
        },
        py::arg("t"), py::arg("n") = 1, "(exact, t*n convention) max degree over log2 N.");

#ifdef GRIDPAIR_VERSION
  m.attr("__version__") = GRIDPAIR_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
