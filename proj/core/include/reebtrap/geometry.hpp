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

#include <vector>

#include "reebtrap/rational.hpp"

namespace reebtrap {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point&) const = default;
};

/// A closed segment with distinct endpoints.
struct Segment {
  Point a;
  Point b;
};

enum class RingLocation { kInside, kOutside, kBoundary };

/// Sign of the cross product (q - p) x (r - p):
/// +1 left turn, 0 collinear, -1 right turn. Exact.
int orient(const Point& p, const Point& q, const Point& r);

/// The x-coordinate where s crosses the horizontal line at the given
/// height. s must span that height and must not be horizontal; throws
/// std::invalid_argument otherwise.
Rational edge_x_at_level(const Segment& s, const Rational& y);

/// Shoelace signed area of a ring; positive iff counter-clockwise.
/// Throws std::invalid_argument for rings with fewer than 3 vertices.
Rational signed_area(const std::vector<Point>& ring);

/// Exact crossing-count classification of a point against a simple ring.
/// A crossing is counted iff the edge's lower endpoint is strictly below
/// the rightward ray from p. Behavior on non-simple rings is undefined.
RingLocation point_in_ring(const Point& p, const std::vector<Point>& ring);

/// True iff the closed segments share at least one point other than an
/// endpoint common to both. Exact; collinear overlaps of positive length
/// count as crossings.
bool segments_cross(const Segment& s1, const Segment& s2);

}  // namespace reebtrap
