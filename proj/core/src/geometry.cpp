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

#include "reebtrap/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace reebtrap {

namespace {

Rational cross(const Point& origin, const Point& u, const Point& v) {
  return (u.x - origin.x) * (v.y - origin.y) - (u.y - origin.y) * (v.x - origin.x);
}

/// p collinear with s assumed; true iff p lies within s's bounding box.
bool on_segment_collinear(const Point& p, const Segment& s) {
  const auto& [lo_x, hi_x] = std::minmax(s.a.x, s.b.x);
  const auto& [lo_y, hi_y] = std::minmax(s.a.y, s.b.y);
  return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
}

bool is_endpoint_of(const Point& p, const Segment& s) {
  return p == s.a || p == s.b;
}

}  // namespace

int orient(const Point& p, const Point& q, const Point& r) {
  const Rational c = cross(p, q, r);
  if (c > 0) return 1;
  if (c < 0) return -1;
  return 0;
}

Rational edge_x_at_level(const Segment& s, const Rational& y) {
  if (s.a.y == s.b.y) {
    throw std::invalid_argument("edge_x_at_level: horizontal segment");
  }
  const auto& [lo, hi] = std::minmax(s.a.y, s.b.y);
  if (y < lo || y > hi) {
    throw std::invalid_argument("edge_x_at_level: height outside segment span");
  }
  return s.a.x + (s.b.x - s.a.x) * (y - s.a.y) / (s.b.y - s.a.y);
}

Rational signed_area(const std::vector<Point>& ring) {
  if (ring.size() < 3) {
    throw std::invalid_argument("signed_area: ring needs at least 3 vertices");
  }
  Rational twice = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

RingLocation point_in_ring(const Point& p, const std::vector<Point>& ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Segment edge{ring[i], ring[(i + 1) % n]};
    if (orient(edge.a, edge.b, p) == 0 && on_segment_collinear(p, edge)) {
      return RingLocation::kBoundary;
    }
  }
  int crossings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if ((a.y < p.y) == (b.y < p.y)) continue;  // skips horizontal edges too
    const Rational x = edge_x_at_level({a, b}, p.y);
    if (x > p.x) ++crossings;
  }
  return (crossings % 2 == 1) ? RingLocation::kInside : RingLocation::kOutside;
}

bool segments_cross(const Segment& s1, const Segment& s2) {
  const int o1 = orient(s1.a, s1.b, s2.a);
  const int o2 = orient(s1.a, s1.b, s2.b);
  const int o3 = orient(s2.a, s2.b, s1.a);
  const int o4 = orient(s2.a, s2.b, s1.b);

  // Proper interior crossing.
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;

  if (o1 == 0 && o2 == 0) {
    // Collinear: a positive-length overlap is a crossing, a single shared
    // point can only be an endpoint of both.
    const bool vertical = s1.a.x == s1.b.x;
    auto coord = [vertical](const Point& p) { return vertical ? p.y : p.x; };
    const auto [lo1, hi1] = std::minmax({coord(s1.a), coord(s1.b)});
    const auto [lo2, hi2] = std::minmax({coord(s2.a), coord(s2.b)});
    return std::max(lo1, lo2) < std::min(hi1, hi2);
  }

  // Touch: an endpoint of one lies on the other. That is a crossing unless
  // the contact point is a declared endpoint of both segments.
  if (o1 == 0 && on_segment_collinear(s2.a, s1) && !is_endpoint_of(s2.a, s1)) return true;
  if (o2 == 0 && on_segment_collinear(s2.b, s1) && !is_endpoint_of(s2.b, s1)) return true;
  if (o3 == 0 && on_segment_collinear(s1.a, s2) && !is_endpoint_of(s1.a, s2)) return true;
  if (o4 == 0 && on_segment_collinear(s1.b, s2) && !is_endpoint_of(s1.b, s2)) return true;
  return false;
}

}  // namespace reebtrap
