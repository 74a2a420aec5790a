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

#ifndef GRIDPAIR_GRID_HPP
#define GRIDPAIR_GRID_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gridpair {

/// A vertex of K_t^n, given by its n coordinates in [0, t).
///
/// The last coordinate selects the layer, the first n-1 coordinates select
/// the column.
struct Vertex {
  std::vector<int> coords;

  Vertex() = default;
  explicit Vertex(std::vector<int> c) : coords(std::move(c)) {}
  Vertex(std::initializer_list<int> c) : coords(c) {}

  std::size_t dimension() const { return coords.size(); }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

/// The complete grid graph K_t^n: vertices are n-tuples over [0, t), two
/// vertices are adjacent iff they differ in exactly one coordinate.
class GridSpec {
 public:
  /// Throws Error(kInvalidArgument) unless t >= 2 and n >= 1.
  GridSpec(int t, int n);

  int t() const { return t_; }
  int n() const { return n_; }

  /// t^n; throws Error(kOverflow) if it does not fit in 64 bits.
  std::uint64_t vertex_count() const;

  /// n(t-1).
  int degree() const { return n_ * (t_ - 1); }

  bool contains(const Vertex& v) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int t_;
  int n_;
};

/// A walk in the grid that never repeats an edge. Vertices may repeat.
struct Trail {
  std::vector<Vertex> vertices;

  /// Number of edges.
  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  const Vertex& front() const { return vertices.front(); }
  const Vertex& back() const { return vertices.back(); }

  Trail reversed() const;

  friend bool operator==(const Trail&, const Trail&) = default;
};

/// True iff u and v differ in exactly one coordinate. Throws
/// Error(kDimensionMismatch) when either vertex has the wrong dimension and
/// Error(kInvalidArgument) when a coordinate is out of range.
bool is_grid_edge(const Vertex& u, const Vertex& v, const GridSpec& spec);

/// Last coordinate.
int layer_of(const Vertex& v);

/// First n-1 coordinates; empty for n = 1.
Vertex column_of(const Vertex& v);

/// Appends coordinate k to every vertex of a trail in K_t^{n-1}, placing it
/// in layer k of K_t^n.
Trail lift_trail(const Trail& trail, int k, int t);

/// Prefixes every vertex of a trail inside one K_t (1-coordinate vertices)
/// with the column coordinates.
Trail embed_in_column(const Vertex& column, const Trail& trail);

/// n * t^{n-1} * t(t-1)/2. Throws Error(kOverflow).
std::uint64_t edge_count(const GridSpec& spec);

/// Mixed-radix rank of v, last coordinate least significant.
std::uint64_t vertex_rank(const GridSpec& spec, const Vertex& v);
Vertex vertex_at(const GridSpec& spec, std::uint64_t rank);

/// Dense index in [0, edge_count(spec)) of the grid edge uv. Throws
/// Error(kInvalidArgument) if uv is not a grid edge.
std::uint64_t edge_rank(const GridSpec& spec, const Vertex& u,
                        const Vertex& v);

}  // namespace gridpair

#endif  // GRIDPAIR_GRID_HPP
