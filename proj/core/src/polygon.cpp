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

#include "reebtrap/polygon.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace reebtrap {

namespace {

std::string ring_label(int ring) {
  return ring == 0 ? std::string("outer") : "hole " + std::to_string(ring - 1);
}

ValidationIssue make_issue(ValidationCode code, int ring, int other_ring, int vertex,
                           int other_vertex, std::string message) {
  return ValidationIssue{code, ring, other_ring, vertex, other_vertex, std::move(message)};
}

/// Simplicity of one ring: pairwise edge checks plus duplicate vertices.
void check_ring_simple(const Ring& ring, int ring_index, std::vector<ValidationIssue>& issues) {
  const int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (ring[i] == ring[j]) {
        issues.push_back(make_issue(
            ValidationCode::kNonSimpleRing, ring_index, -1, i, j,
            "NonSimpleRing: " + ring_label(ring_index) + " repeats vertex " + std::to_string(i) +
                " at vertex " + std::to_string(j)));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const Segment ei{ring[i], ring[(i + 1) % n]};
    if (ei.a == ei.b) continue;  // reported as duplicate vertex above
    for (int j = i + 1; j < n; ++j) {
      const Segment ej{ring[j], ring[(j + 1) % n]};
      if (ej.a == ej.b) continue;
      if (segments_cross(ei, ej)) {
        issues.push_back(make_issue(
            ValidationCode::kNonSimpleRing, ring_index, -1, i, j,
            "NonSimpleRing: " + ring_label(ring_index) + " edges " + std::to_string(i) + " and " +
                std::to_string(j) + " intersect"));
      }
    }
  }
}

}  // namespace

const char* kind_name(VertexKind kind) {
  switch (kind) {
    case VertexKind::kSource: return "source";
    case VertexKind::kSink: return "sink";
    case VertexKind::kRegularLeft: return "regular_left";
    case VertexKind::kRegularRight: return "regular_right";
    case VertexKind::kMerge: return "merge";
    case VertexKind::kSplit: return "split";
  }
  return "?";
}

const char* kind_code(VertexKind kind) {
  switch (kind) {
    case VertexKind::kSource: return "so";
    case VertexKind::kSink: return "si";
    case VertexKind::kRegularLeft: return "rl";
    case VertexKind::kRegularRight: return "rr";
    case VertexKind::kMerge: return "me";
    case VertexKind::kSplit: return "sp";
  }
  return "?";
}

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(issues.empty() ? "validation failed"
                                        : "validation failed: " + issues.front().message +
                                              (issues.size() > 1 ? " (+" +
                                                   std::to_string(issues.size() - 1) + " more)"
                                                                 : "")),
      issues_(std::move(issues)) {}

int PolygonWithHoles::vertex_count() const {
  int total = 0;
  for (const Ring& r : rings_) total += static_cast<int>(r.size());
  return total;
}

const Point& PolygonWithHoles::vertex(VertexRef ref) const {
  return rings_.at(ref.ring).at(ref.index);
}

PolygonWithHoles validate(Ring raw_outer, std::vector<Ring> raw_holes) {
  std::vector<ValidationIssue> issues;
  std::vector<Ring> rings;
  rings.push_back(std::move(raw_outer));
  for (Ring& hole : raw_holes) rings.push_back(std::move(hole));
  const int ring_count = static_cast<int>(rings.size());

  // Phase 1: each ring on its own. Size and area first; a degenerate ring
  // makes the remaining checks meaningless for it.
  std::vector<bool> ring_ok(ring_count, true);
  for (int r = 0; r < ring_count; ++r) {
    if (rings[r].size() < 3) {
      ring_ok[r] = false;
      issues.push_back(make_issue(ValidationCode::kDegenerateRing, r, -1, -1, -1,
                                  "DegenerateRing: " + ring_label(r) + " has " +
                                      std::to_string(rings[r].size()) + " vertices"));
      continue;
    }
    if (signed_area(rings[r]) == 0) {
      ring_ok[r] = false;
      issues.push_back(make_issue(ValidationCode::kDegenerateRing, r, -1, -1, -1,
                                  "DegenerateRing: " + ring_label(r) + " has zero area"));
      continue;
    }
    check_ring_simple(rings[r], r, issues);
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  // Phase 2: relations between rings. Orientation-independent, so these
  // run on the input rings and issue indices match the caller's data.
  for (int r = 1; r < ring_count; ++r) {
    for (int v = 0; v < static_cast<int>(rings[r].size()); ++v) {
      if (point_in_ring(rings[r][v], rings[0]) != RingLocation::kInside) {
        issues.push_back(make_issue(
            ValidationCode::kHoleNotInside, r, 0, v, -1,
            "HoleNotInside: " + ring_label(r) + " vertex " + std::to_string(v) +
                " is not strictly inside the outer ring"));
      }
    }
  }
  for (int r1 = 0; r1 < ring_count; ++r1) {
    for (int r2 = r1 + 1; r2 < ring_count; ++r2) {
      bool crossed = false;
      const int n1 = static_cast<int>(rings[r1].size());
      const int n2 = static_cast<int>(rings[r2].size());
      for (int i = 0; i < n1 && !crossed; ++i) {
        const Segment e1{rings[r1][i], rings[r1][(i + 1) % n1]};
        for (int j = 0; j < n2 && !crossed; ++j) {
          const Segment e2{rings[r2][j], rings[r2][(j + 1) % n2]};
          if (segments_cross(e1, e2)) {
            crossed = true;
            issues.push_back(make_issue(
                ValidationCode::kRingsIntersect, r1, r2, i, j,
                "RingsIntersect: " + ring_label(r1) + " edge " + std::to_string(i) + " crosses " +
                    ring_label(r2) + " edge " + std::to_string(j)));
          }
        }
      }
      if (crossed || r1 == 0) continue;
      // Disjoint edge sets: one hole inside the other is still an overlap.
      if (point_in_ring(rings[r2][0], rings[r1]) == RingLocation::kInside ||
          point_in_ring(rings[r1][0], rings[r2]) == RingLocation::kInside) {
        issues.push_back(make_issue(ValidationCode::kHolesOverlap, r1, r2, -1, -1,
                                    "HolesOverlap: " + ring_label(r2) + " and " + ring_label(r1) +
                                        " are nested"));
      }
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  // Phase 3: general position. All heights pairwise distinct.
  std::vector<std::tuple<Rational, int, int>> heights;
  for (int r = 0; r < ring_count; ++r) {
    for (int v = 0; v < static_cast<int>(rings[r].size()); ++v) {
      heights.emplace_back(rings[r][v].y, r, v);
    }
  }
  std::sort(heights.begin(), heights.end());
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (std::get<0>(heights[i]) == std::get<0>(heights[i - 1])) {
      const auto& [y, r1, v1] = heights[i - 1];
      const auto& [y2, r2, v2] = heights[i];
      issues.push_back(make_issue(
          ValidationCode::kDuplicateHeight, r1, r2, v1, v2,
          "DuplicateHeight: " + ring_label(r1) + " vertex " + std::to_string(v1) + " and " +
              ring_label(r2) + " vertex " + std::to_string(v2) + " share height " +
              to_string(y)));
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  // Orientation normalization: outer CCW, holes CW (interior to the left).
  if (signed_area(rings[0]) < 0) std::reverse(rings[0].begin(), rings[0].end());
  for (int r = 1; r < ring_count; ++r) {
    if (signed_area(rings[r]) > 0) std::reverse(rings[r].begin(), rings[r].end());
  }

  PolygonWithHoles poly;
  poly.rings_ = std::move(rings);
  return poly;
}

VertexKind classify_vertex(const PolygonWithHoles& poly, int ring_index, int vertex_index) {
  const Ring& ring = poly.ring(ring_index);
  const int n = static_cast<int>(ring.size());
  if (vertex_index < 0 || vertex_index >= n) {
    throw std::out_of_range("classify_vertex: vertex index out of range");
  }
  const Point& prev = ring[(vertex_index + n - 1) % n];
  const Point& v = ring[vertex_index];
  const Point& next = ring[(vertex_index + 1) % n];

  const bool prev_above = prev.y > v.y;
  const bool next_above = next.y > v.y;
  if (prev_above != next_above) {
    // Boundary ascends through v: interior (left of the path) lies on the
    // -x side, so the rightward ray exits the region -> mark right.
    return prev_above ? VertexKind::kRegularLeft : VertexKind::kRegularRight;
  }

  // Interior wedge spans CCW from the outgoing direction to the reversed
  // incoming one; a positive turn means the wedge is convex.
  const int turn = orient(v, next, prev);
  if (turn == 0) {
    throw std::logic_error("classify_vertex: degenerate wedge on validated polygon");
  }
  if (next_above) {
    return turn > 0 ? VertexKind::kSource : VertexKind::kSplit;
  }
  return turn > 0 ? VertexKind::kSink : VertexKind::kMerge;
}

Rational net_area(const PolygonWithHoles& poly) {
  Rational total = abs(signed_area(poly.outer()));
  for (int r = 1; r < poly.ring_count(); ++r) {
    total -= abs(signed_area(poly.ring(r)));
  }
  return total;
}

RingLocation region_locate(const PolygonWithHoles& poly, const Point& p) {
  const RingLocation outer = point_in_ring(p, poly.outer());
  if (outer != RingLocation::kInside) return outer;
  for (int r = 1; r < poly.ring_count(); ++r) {
    switch (point_in_ring(p, poly.ring(r))) {
      case RingLocation::kInside: return RingLocation::kOutside;
      case RingLocation::kBoundary: return RingLocation::kBoundary;
      case RingLocation::kOutside: break;
    }
  }
  return RingLocation::kInside;
}

namespace {

PolygonWithHoles reflect(const PolygonWithHoles& poly, bool flip_x) {
  auto transform = [flip_x](const Ring& ring) {
    Ring out;
    out.reserve(ring.size());
    for (const Point& p : ring) {
      out.push_back(flip_x ? Point{-p.x, p.y} : Point{p.x, -p.y});
    }
    return out;
  };
  Ring outer = transform(poly.outer());
  std::vector<Ring> holes;
  for (int r = 1; r < poly.ring_count(); ++r) holes.push_back(transform(poly.ring(r)));
  return validate(std::move(outer), std::move(holes));
}

}  // namespace

PolygonWithHoles reflect_x(const PolygonWithHoles& poly) { return reflect(poly, true); }

PolygonWithHoles reflect_y(const PolygonWithHoles& poly) { return reflect(poly, false); }

}  // namespace reebtrap
