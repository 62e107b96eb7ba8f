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

#include <compare>
#include <string>
#include <vector>

#include "reebtrap/geometry.hpp"

namespace reebtrap {

using Ring = std::vector<Point>;

enum class Side { kLeft, kRight };

/// Local event type of a polygon vertex under the height function y.
/// Regular (degree-2) vertices carry a left/right mark: left means the
/// rightward horizontal ray from the vertex immediately enters the region.
enum class VertexKind { kSource, kSink, kRegularLeft, kRegularRight, kMerge, kSplit };

const char* kind_name(VertexKind kind);  // "source", "regular_left", ...
const char* kind_code(VertexKind kind);  // "so", "rl", ...

struct VertexRef {
  int ring = 0;  // 0 = outer, 1.. = holes
  int index = 0;

  auto operator<=>(const VertexRef&) const = default;
};

enum class ValidationCode {
  kDegenerateRing,
  kNonSimpleRing,
  kHoleNotInside,
  kRingsIntersect,
  kHolesOverlap,
  kDuplicateHeight,
};

struct ValidationIssue {
  ValidationCode code;
  int ring = -1;        // primary offending ring (input indexing)
  int other_ring = -1;  // second ring for pairwise violations
  int vertex = -1;      // primary offending vertex (input indexing)
  int other_vertex = -1;
  std::string message;  // rendered, deterministic, one line
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

/// A validated polygon with holes. The outer ring is counter-clockwise and
/// every hole ring clockwise, so the region interior lies to the left of
/// every directed edge. Every ring is simple, holes lie strictly inside the
/// outer ring and are pairwise disjoint, and all vertex heights across all
/// rings are pairwise distinct (general position; no horizontal edges).
class PolygonWithHoles {
 public:
  const Ring& outer() const { return rings_.front(); }
  int hole_count() const { return static_cast<int>(rings_.size()) - 1; }
  int connectivity() const { return static_cast<int>(rings_.size()); }
  int ring_count() const { return static_cast<int>(rings_.size()); }
  const Ring& ring(int index) const { return rings_.at(index); }
  const std::vector<Ring>& rings() const { return rings_; }

  /// Total vertex count across all rings.
  int vertex_count() const;

  const Point& vertex(VertexRef ref) const;

  bool operator==(const PolygonWithHoles&) const = default;

 private:
  friend PolygonWithHoles validate(Ring raw_outer, std::vector<Ring> raw_holes);
  PolygonWithHoles() = default;

  std::vector<Ring> rings_;  // [0] outer CCW, [1..] holes CW
};

/// The validation gate. Fixes ring orientations, checks every structural
/// invariant, and reports all violations found in the failing phase via
/// ValidationError (issue indices refer to the input rings as given).
PolygonWithHoles validate(Ring raw_outer, std::vector<Ring> raw_holes);

/// Classifies a vertex into one of the six event kinds from the local
/// wedge of its two incident edges. Throws std::out_of_range on bad
/// indices.
VertexKind classify_vertex(const PolygonWithHoles& poly, int ring_index, int vertex_index);

/// |area(outer)| - sum of |area(hole)|.
Rational net_area(const PolygonWithHoles& poly);

/// Exact location of a point relative to the region (inside the outer
/// ring and outside every hole).
RingLocation region_locate(const PolygonWithHoles& poly, const Point& p);

/// The polygon reflected about the vertical axis (x -> -x), revalidated.
PolygonWithHoles reflect_x(const PolygonWithHoles& poly);

/// The polygon reflected about the horizontal axis (y -> -y), revalidated.
PolygonWithHoles reflect_y(const PolygonWithHoles& poly);

}  // namespace reebtrap
