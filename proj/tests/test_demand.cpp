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

#include <doctest.h>

#include <random>

#include "gridpair/demand.hpp"
#include "gridpair/error.hpp"
#include "gridpair/io.hpp"
#include "gridpair/router.hpp"
#include "gridpair/verify.hpp"
#include "support.hpp"

using namespace gridpair;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("from_pairing") {
  {
    const std::vector<std::pair<Vertex, Vertex>> pairs{{{0}, {1}}};
    const DemandGraph d = from_pairing(GridSpec(2, 1), pairs);
    CHECK(d.edges.size() == 1);
    CHECK(d.max_degree() == 1);
  }
  {
    const std::vector<std::pair<Vertex, Vertex>> pairs{{{0, 0}, {2, 2}},
                                                       {{0, 1}, {1, 0}}};
    const DemandGraph d = from_pairing(GridSpec(3, 2), pairs);
    CHECK(d.edges.size() == 2);
    CHECK(d.max_degree() == 1);
    CHECK(d.edges[1].id == 1);
  }
  {
    const std::vector<std::pair<Vertex, Vertex>> pairs{{{0}, {0}}};
    CHECK(code_of([&] { from_pairing(GridSpec(2, 1), pairs); }) ==
          ErrorCode::kInvalidArgument);
  }
  {
    const std::vector<std::pair<Vertex, Vertex>> pairs{{{0}, {5}}};
    CHECK(code_of([&] { from_pairing(GridSpec(2, 1), pairs); }) ==
          ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("make_demand_graph rejects duplicate ids") {
  std::vector<DemandEdge> edges{{3, {0}, {1}}, {3, {1}, {2}}};
  CHECK_THROWS_AS(make_demand_graph(GridSpec(3, 1), edges), Error);
}

TEST_CASE("choose_q") {
  CHECK(choose_q(GridSpec(18, 1), 1) == 2);
  CHECK(choose_q(GridSpec(30, 1), 3) == 4);
  CHECK(code_of([] { choose_q(GridSpec(17, 1), 1); }) ==
        ErrorCode::kInfeasibleBudget);
  CHECK(code_of([] { choose_q(GridSpec(30, 1), 5); }) ==
        ErrorCode::kInfeasibleBudget);
  CHECK(budget_limit(18) == 2);
  CHECK(smallest_even_budget(0) == 2);
  CHECK(smallest_even_budget(5) == 6);
}

TEST_CASE("q=4 chosen for degree 3 on t=30 is accepted downstream") {
  const GridSpec spec(30, 2);
  const DemandGraph d = generate_multigraph(spec, 3, 11, /*unchecked=*/true);
  CHECK(d.max_degree() == 3);
  SolveStats stats;
  const Routing r = solve(d, {}, &stats);
  CHECK(stats.q == 4);
  CHECK(verify(spec, d, r).ok);
}

TEST_CASE("split_demands") {
  const GridSpec spec(3, 2);
  auto d = make_demand_graph(spec, {{0, {0, 1}, {0, 2}}, {1, {0, 1}, {1, 1}}});
  const DemandSplit split = split_demands(d);
  REQUIRE(split.intra_column.size() == 1);
  REQUIRE(split.cross_column.size() == 1);
  CHECK(split.intra_column[0].id == 0);
  CHECK(split.cross_column[0].id == 1);

  const DemandGraph one_dim = generate_pairing(GridSpec(18, 1), 3);
  CHECK(split_demands(one_dim).intra_column.size() == one_dim.edges.size());
}

TEST_CASE("split_demands is a partition") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DemandGraph d = generate_multigraph(GridSpec(4, 3), 2, seed, true);
    const DemandSplit split = split_demands(d);
    std::vector<DemandEdge> merged = split.intra_column;
    merged.insert(merged.end(), split.cross_column.begin(),
                  split.cross_column.end());
    std::sort(merged.begin(), merged.end(),
              [](const DemandEdge& a, const DemandEdge& b) { return a.id < b.id; });
    CHECK(merged == d.edges);
  }
}

TEST_CASE("project") {
  const GridSpec spec(4, 3);
  const std::vector<DemandEdge> cross{{7, {0, 1, 0}, {2, 3, 1}}};
  const AuxGraph h = project(cross, spec);
  REQUIRE(h.edges.size() == 1);
  CHECK(h.base == GridSpec(4, 2));
  CHECK(vertex_at(h.base, h.edges[0].a) == Vertex{0, 1});
  CHECK(vertex_at(h.base, h.edges[0].b) == Vertex{2, 3});
  CHECK(h.edges[0].origin == 7);

  const std::vector<DemandEdge> parallel{{0, {0, 0, 0}, {1, 1, 0}},
                                         {1, {0, 0, 2}, {1, 1, 3}}};
  const AuxGraph hp = project(parallel, spec);
  CHECK(hp.edges.size() == 2);
  CHECK(hp.edges[0].a == hp.edges[1].a);
  CHECK(hp.edges[0].b == hp.edges[1].b);

  const std::vector<DemandEdge> intra{{0, {0, 0, 0}, {0, 0, 2}}};
  CHECK_THROWS_AS(project(intra, spec), Error);
  CHECK_THROWS_AS(project(intra, GridSpec(4, 1)), Error);
}

TEST_CASE("projected degree stays within t*q for random pairings") {
  const GridSpec spec(18, 2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DemandGraph d = generate_pairing(spec, seed);
    const DemandSplit split = split_demands(d);
    const AuxGraph h = project(split.cross_column, spec);
    CHECK(h.edges.size() == split.cross_column.size());
    CHECK(h.max_degree() <= 36);
  }
}

TEST_CASE("regularize") {
  SUBCASE("regular input is unchanged") {
    AuxGraph h{GridSpec(3, 1), {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}}};
    const AuxGraph out = regularize(h, 2);
    CHECK(out.edges.size() == 3);
  }
  SUBCASE("two deficient vertices are padded to r") {
    AuxGraph h{GridSpec(3, 1), {{0, 1, 0}, {0, 2, 1}, {0, 1, 2}, {0, 2, 3}}};
    const AuxGraph out = regularize(h, 4);
    CHECK(testing::all_degrees_equal(out.degrees(), 4));
    for (std::size_t i = 4; i < out.edges.size(); ++i) {
      CHECK(out.edges[i].is_dummy());
      CHECK(out.edges[i].a != out.edges[i].b);
    }
  }
  SUBCASE("a lone deficit becomes loops") {
    AuxGraph h{GridSpec(3, 1), {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3}}};
    const AuxGraph out = regularize(h, 4);
    REQUIRE(out.edges.size() == 6);
    CHECK(out.edges[4].is_loop());
    CHECK(out.edges[5].is_loop());
    CHECK(out.edges[4].a == 2);
    CHECK(testing::all_degrees_equal(out.degrees(), 4));
  }
  SUBCASE("degree above r is rejected") {
    AuxGraph h{GridSpec(3, 1), {{0, 1, 0}, {0, 1, 1}, {0, 2, 2}}};
    CHECK_THROWS_AS(regularize(h, 2), Error);
  }
}

TEST_CASE("regularize reaches t*q on random projections and keeps demands") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const GridSpec spec(18, 2 + trial % 2);
    const DemandGraph d = generate_pairing(spec, rng());
    const AuxGraph h = project(split_demands(d).cross_column, spec);
    const AuxGraph out = regularize(h, 18 * 2);
    CHECK(testing::all_degrees_equal(out.degrees(), 36));
    REQUIRE(out.edges.size() >= h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      CHECK(out.edges[i].origin == h.edges[i].origin);
      CHECK(out.edges[i].a == h.edges[i].a);
    }
    for (std::size_t i = h.edges.size(); i < out.edges.size(); ++i) {
      CHECK(out.edges[i].is_dummy());
    }
  }
}
