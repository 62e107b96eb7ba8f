// Copyright 2026 The Reebtrap Authors.
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

#pragma once

#include <stdexcept>
#include <vector>

#include "reebtrap/polygon.hpp"
#include "reebtrap/reeb_graph.hpp"

namespace reebtrap {

/// Directed polygon edge from ring vertex `index` to `index + 1` (cyclic).
struct EdgeRef {
  int ring = 0;
  int index = 0;

  auto operator<=>(const EdgeRef&) const = default;
};

/// Closed x-interval at a fixed height; lo == hi at degenerate spans.
struct Interval {
  Rational lo;
  Rational hi;

  bool operator==(const Interval&) const = default;
};

/// One cell of the horizontal-extension decomposition: two horizontal
/// parallel sides (either may degenerate to a point) between two polygon
/// edges whose vertical spans cover the cell's height range.
struct Trapezoid {
  VertexRef lower_vertex;
  VertexRef upper_vertex;
  EdgeRef left_wall;
  EdgeRef right_wall;
  Interval bottom_span;
  Interval top_span;
  int reeb_edge = -1;  // id of the matching graph edge (the bijection)
};

/// A horizontal extension inserted at a vertex, running to the first wall
/// hit in the given direction.
struct InsertedSegment {
  VertexRef vertex;
  Side direction;
  Point endpoint;
};

struct TrapezoidalMap {
  std::vector<Trapezoid> cells;
  std::vector<InsertedSegment> inserted_segments;  // in event order
  int map_vertex_count = 0;  // polygon vertices + extension endpoints
};

struct BuildResult {
  ReebGraph graph;
  TrapezoidalMap map;
  std::vector<VertexRef> vertex_by_rank;  // rank -> polygon vertex
};

/// Raised when a sweep event cannot be matched against the active
/// structure; unreachable for validated polygons.
class InternalInvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One upward sweep over the vertex events that produces the Reeb graph
/// and the trapezoidal map together, one trapezoid per graph edge.
BuildResult build(const PolygonWithHoles& poly);

/// Exact area of a cell: mean of the parallel side lengths times the
/// height difference of the bounding vertices.
Rational cell_area(const PolygonWithHoles& poly, const Trapezoid& cell);

}  // namespace reebtrap
