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

#include "gridpair/grid.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "gridpair/error.hpp"

namespace gridpair {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "grid size exceeds 64-bit range");
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

void check_vertex(const GridSpec& spec, const Vertex& v) {
  if (v.dimension() != static_cast<std::size_t>(spec.n())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vertex " + to_string(v) + " has dimension " +
                    std::to_string(v.dimension()) + ", expected " +
                    std::to_string(spec.n()));
  }
  if (!spec.contains(v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + to_string(v) + " has a coordinate outside [0, " +
                    std::to_string(spec.t()) + ")");
  }
}

}  // namespace

std::string to_string(const Vertex& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) os << ',';
    os << v.coords[i];
  }
  os << ')';
  return os.str();
}

GridSpec::GridSpec(int t, int n) : t_(t), n_(n) {
  if (t < 2 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid requires t >= 2 and n >= 1, got t=" + std::to_string(t) +
                    " n=" + std::to_string(n));
  }
}

std::uint64_t GridSpec::vertex_count() const { return checked_pow(t_, n_); }

bool GridSpec::contains(const Vertex& v) const {
  if (v.dimension() != static_cast<std::size_t>(n_)) return false;
  return std::all_of(v.coords.begin(), v.coords.end(),
                     [this](int c) { return c >= 0 && c < t_; });
}

Trail Trail::reversed() const {
  return Trail{{vertices.rbegin(), vertices.rend()}};
}

bool is_grid_edge(const Vertex& u, const Vertex& v, const GridSpec& spec) {
  check_vertex(spec, u);
  check_vertex(spec, v);
  int differing = 0;
  for (int i = 0; i < spec.n(); ++i) {
    if (u.coords[i] != v.coords[i]) ++differing;
  }
  return differing == 1;
}

int layer_of(const Vertex& v) { return v.coords.back(); }

Vertex column_of(const Vertex& v) {
  return Vertex(std::vector<int>(v.coords.begin(), v.coords.end() - 1));
}

Trail lift_trail(const Trail& trail, int k, int t) {
  if (k < 0 || k >= t) {
    throw Error(ErrorCode::kInvalidArgument,
                "layer index " + std::to_string(k) + " outside [0, " +
                    std::to_string(t) + ")");
  }
  Trail out;
  out.vertices.reserve(trail.vertices.size());
  for (const Vertex& v : trail.vertices) {
    Vertex w = v;
    w.coords.push_back(k);
    out.vertices.push_back(std::move(w));
  }
  return out;
}

Trail embed_in_column(const Vertex& column, const Trail& trail) {
  Trail out;
  out.vertices.reserve(trail.vertices.size());
  for (const Vertex& v : trail.vertices) {
    Vertex w = column;
    w.coords.insert(w.coords.end(), v.coords.begin(), v.coords.end());
    out.vertices.push_back(std::move(w));
  }
  return out;
}

std::uint64_t edge_count(const GridSpec& spec) {
  const auto t = static_cast<std::uint64_t>(spec.t());
  const std::uint64_t per_clique = t * (t - 1) / 2;
  return checked_mul(checked_mul(static_cast<std::uint64_t>(spec.n()),
                                 checked_pow(t, spec.n() - 1)),
                     per_clique);
}

std::uint64_t vertex_rank(const GridSpec& spec, const Vertex& v) {
  check_vertex(spec, v);
  std::uint64_t rank = 0;
  for (int c : v.coords) rank = rank * spec.t() + static_cast<std::uint64_t>(c);
  return rank;
}

Vertex vertex_at(const GridSpec& spec, std::uint64_t rank) {
  if (rank >= spec.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex rank " + std::to_string(rank) + " out of range");
  }
  std::vector<int> coords(spec.n());
  for (int i = spec.n() - 1; i >= 0; --i) {
    coords[i] = static_cast<int>(rank % spec.t());
    rank /= spec.t();
  }
  return Vertex(std::move(coords));
}

std::uint64_t edge_rank(const GridSpec& spec, const Vertex& u,
                        const Vertex& v) {
  if (!is_grid_edge(u, v, spec)) {
    throw Error(ErrorCode::kInvalidArgument,
                to_string(u) + "-" + to_string(v) + " is not a grid edge");
  }
  const auto t = static_cast<std::uint64_t>(spec.t());
  int dim = 0;
  std::uint64_t rest = 0;
  for (int i = 0; i < spec.n(); ++i) {
    if (u.coords[i] != v.coords[i]) {
      dim = i;
      continue;
    }
    rest = rest * t + static_cast<std::uint64_t>(u.coords[i]);
  }
  auto a = static_cast<std::uint64_t>(std::min(u.coords[dim], v.coords[dim]));
  auto b = static_cast<std::uint64_t>(std::max(u.coords[dim], v.coords[dim]));
  const std::uint64_t pairs = t * (t - 1) / 2;
  const std::uint64_t pair = a * (2 * t - a - 1) / 2 + (b - a - 1);
  const std::uint64_t rows = checked_pow(t, spec.n() - 1);
  return (static_cast<std::uint64_t>(dim) * rows + rest) * pairs + pair;
}

}  // namespace gridpair
