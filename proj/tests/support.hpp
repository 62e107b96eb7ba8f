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

// Shared fixtures, generators, and independent oracles for the test and
// acceptance suites. Everything here stays independent of the code paths
// it is used to check: the probe oracle classifies vertices with inside
// tests only, and invariant checks recompute quantities from scratch.

#pragma once

#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "reebtrap/enumerate.hpp"
#include "reebtrap/io.hpp"
#include "reebtrap/sweep.hpp"

namespace reebtrap::testing {

inline Point pt(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

inline Point pt(const std::string& x, const std::string& y) {
  return Point{parse_rational(x), parse_rational(y)};
}

// Triangle (0,0),(4,1),(2,5): one regular vertex, two cells.
inline Ring tri_fixture_ring() { return Ring{pt(0, 0), pt(4, 1), pt(2, 5)}; }

inline PolygonWithHoles tri_fixture() { return validate(tri_fixture_ring(), {}); }

// Triangle with one triangular hole; the standard 2-connected fixture.
inline Ring two_connected_outer() { return Ring{pt(0, 0), pt(12, 4), pt(2, 9)}; }

inline Ring two_connected_hole() { return Ring{pt(5, 3), pt(6, 5), pt(5, 7)}; }

inline PolygonWithHoles two_connected_fixture() {
  return validate(two_connected_outer(), {two_connected_hole()});
}

inline const char* two_connected_certificate() {
  return "RG1|V=6|kinds=so,sp,rr,rl,me,si|edges=(0,1);(1,2);(1,4);(2,3);(3,4);(4,5)";
}

// Quadrilateral outer ring with a dart-shaped (non-convex) hole whose
// notch births a component inside the hole's wings: exercises sources and
// double merges on hole boundaries.
inline PolygonWithHoles dart_hole_fixture() {
  Ring outer{pt(0, 0), pt(20, 1), pt(21, 15), pt(1, 14)};
  Ring dart{pt(10, 2), pt(7, 10), pt(10, 6), pt(13, 11)};
  return validate(std::move(outer), {std::move(dart)});
}

// ---------------------------------------------------------------------------
// Independent oracles.

/// Winding-number location test; a deliberately different convention from
/// the crossing-count implementation.
inline RingLocation winding_locate(const Point& p, const Ring& ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Segment edge{ring[i], ring[(i + 1) % n]};
    const auto [lo_x, hi_x] = std::minmax(edge.a.x, edge.b.x);
    const auto [lo_y, hi_y] = std::minmax(edge.a.y, edge.b.y);
    if (orient(edge.a, edge.b, p) == 0 && lo_x <= p.x && p.x <= hi_x && lo_y <= p.y &&
        p.y <= hi_y) {
      return RingLocation::kBoundary;
    }
  }
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && orient(a, b, p) > 0) ++winding;
    } else {
      if (b.y <= p.y && orient(a, b, p) < 0) --winding;
    }
  }
  return winding != 0 ? RingLocation::kInside : RingLocation::kOutside;
}

/// Probe-point classification oracle: decides the kind of a vertex purely
/// from region-inclusion of points slightly above, below, and beside it.
/// delta is half the smallest height gap, eps half the smallest horizontal
/// wall distance at the vertex level.
inline VertexKind probe_classify(const PolygonWithHoles& poly, int ring_index,
                                 int vertex_index) {
  const Ring& ring = poly.ring(ring_index);
  const int n = static_cast<int>(ring.size());
  const Point& prev = ring[(vertex_index + n - 1) % n];
  const Point& v = ring[vertex_index];
  const Point& next = ring[(vertex_index + 1) % n];

  // Half of the smallest gap between consecutive event heights.
  std::vector<Rational> heights;
  for (const Ring& r : poly.rings()) {
    for (const Point& p : r) heights.push_back(p.y);
  }
  std::sort(heights.begin(), heights.end());
  Rational delta = heights.back() - heights.front();
  for (std::size_t i = 1; i < heights.size(); ++i) {
    delta = std::min(delta, Rational(heights[i] - heights[i - 1]));
  }
  delta /= 2;

  const bool prev_above = prev.y > v.y;
  const bool next_above = next.y > v.y;
  if (prev_above == next_above) {
    // Midpoint between the two incident edges just above (or below) v.
    const Rational level = next_above ? Rational(v.y + delta) : Rational(v.y - delta);
    const Rational x1 = edge_x_at_level({prev, v}, level);
    const Rational x2 = edge_x_at_level({v, next}, level);
    const Point probe{(x1 + x2) / 2, level};
    const bool inside = region_locate(poly, probe) == RingLocation::kInside;
    if (next_above) return inside ? VertexKind::kSource : VertexKind::kSplit;
    return inside ? VertexKind::kSink : VertexKind::kMerge;
  }

  // Regular: probe just right of v, closer than any other wall crossing
  // the vertex level.
  Rational eps = delta;
  for (int r = 0; r < poly.ring_count(); ++r) {
    const Ring& rr = poly.ring(r);
    const int m = static_cast<int>(rr.size());
    for (int e = 0; e < m; ++e) {
      const Segment edge{rr[e], rr[(e + 1) % m]};
      const auto [lo, hi] = std::minmax(edge.a.y, edge.b.y);
      if (v.y <= lo || v.y >= hi) continue;  // does not cross the level strictly
      const Rational x = edge_x_at_level(edge, v.y);
      if (x != v.x) eps = std::min(eps, Rational(abs(Rational(x - v.x)) / 2));
    }
  }
  const bool right_inside =
      region_locate(poly, Point{v.x + eps, v.y}) == RingLocation::kInside;
  return right_inside ? VertexKind::kRegularLeft : VertexKind::kRegularRight;
}

// ---------------------------------------------------------------------------
// Fuzz generators. Deterministic for a fixed seed.

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random star-shaped simple polygon with 3..max_vertices vertices, all
/// heights distinct, rational coordinates. Star-shapedness (center in the
/// kernel) guarantees simplicity.
inline std::optional<Ring> try_random_star(Rng& rng, int vertices) {
  // Distinct integer directions with every consecutive angular gap < pi.
  struct Dir {
    long long x, y;
  };
  std::vector<Dir> dirs;
  for (int attempts = 0; attempts < 200 && static_cast<int>(dirs.size()) < vertices;
       ++attempts) {
    Dir d{rand_int(rng, -20, 20), rand_int(rng, -20, 20)};
    if (d.x == 0 && d.y == 0) continue;
    const long long g = std::gcd(std::abs(d.x), std::abs(d.y));
    d.x /= g;
    d.y /= g;
    bool dup = false;
    for (const Dir& e : dirs) dup = dup || (e.x == d.x && e.y == d.y);
    if (!dup) dirs.push_back(d);
  }
  if (static_cast<int>(dirs.size()) < vertices) return std::nullopt;

  auto half = [](const Dir& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
  std::sort(dirs.begin(), dirs.end(), [&](const Dir& a, const Dir& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return a.x * b.y - a.y * b.x > 0;
  });
  for (int i = 0; i < vertices; ++i) {
    const Dir& a = dirs[i];
    const Dir& b = dirs[(i + 1) % vertices];
    if (a.x * b.y - a.y * b.x <= 0) return std::nullopt;  // gap of pi or more
  }

  Ring ring;
  for (int i = 0; i < vertices; ++i) {
    const Rational radius(rand_int(rng, 8, 60), rand_int(rng, 1, 4));
    ring.push_back(Point{radius * dirs[i].x, radius * dirs[i].y});
  }
  std::vector<Rational> ys;
  for (const Point& p : ring) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) return std::nullopt;
  return ring;
}

inline PolygonWithHoles random_star_polygon(Rng& rng, int max_vertices) {
  for (;;) {
    const int vertices = rand_int(rng, 3, max_vertices);
    if (auto ring = try_random_star(rng, vertices)) {
      return validate(std::move(*ring), {});
    }
  }
}

/// Random triangle-with-thin-triangular-holes polygon via a random
/// configuration.
inline Configuration random_configuration(Rng& rng, int connectivity) {
  const int n = connectivity;
  std::vector<int> ranks(3 * n - 2);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::shuffle(ranks.begin(), ranks.end(), rng);

  Configuration config;
  config.connectivity = n;
  config.b_rank = ranks.back();
  ranks.pop_back();
  config.b_side = rand_int(rng, 0, 1) ? Side::kRight : Side::kLeft;
  for (int slot = 0; slot < n - 1; ++slot) {
    std::vector<int> triple(ranks.end() - 3, ranks.end());
    ranks.erase(ranks.end() - 3, ranks.end());
    std::sort(triple.begin(), triple.end());
    config.holes.push_back(HoleSpec{triple[2], triple[1], triple[0],
                                    rand_int(rng, 0, 1) ? Side::kRight : Side::kLeft, slot});
  }
  return config;
}

/// Brute-force kind-preserving digraph isomorphism: tries every bijection
/// that respects kind classes directly against the edge multisets. Kept
/// deliberately independent of the certificate machinery it cross-checks.
inline bool brute_isomorphic(const ReebGraph& g1, const ReebGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edges().size() != g2.edges().size()) {
    return false;
  }
  const int v_count = g1.vertex_count();
  std::vector<std::vector<int>> from(6), to(6);
  for (int v = 0; v < v_count; ++v) {
    from[static_cast<int>(g1.kinds()[v])].push_back(v);
    to[static_cast<int>(g2.kinds()[v])].push_back(v);
  }
  for (int k = 0; k < 6; ++k) {
    if (from[k].size() != to[k].size()) return false;
  }

  std::vector<std::pair<int, int>> target = g2.edges();
  std::sort(target.begin(), target.end());
  std::vector<int> map(v_count, -1);
  std::vector<std::pair<int, int>> image(g1.edges().size());

  auto try_all = [&](auto&& self, int kind) -> bool {
    if (kind == 6) {
      for (std::size_t i = 0; i < g1.edges().size(); ++i) {
        image[i] = {map[g1.edges()[i].first], map[g1.edges()[i].second]};
      }
      std::sort(image.begin(), image.end());
      return image == target;
    }
    std::vector<int>& candidates = to[kind];
    std::sort(candidates.begin(), candidates.end());
    do {
      for (std::size_t i = 0; i < from[kind].size(); ++i) map[from[kind][i]] = candidates[i];
      if (self(self, kind + 1)) return true;
    } while (std::next_permutation(candidates.begin(), candidates.end()));
    return false;
  };
  return try_all(try_all, 0);
}

/// Group-quotient equivalence via the brute-force route.
inline bool brute_equivalent(const ReebGraph& g1, const ReebGraph& g2,
                             const EquivalenceSettings& settings) {
  if (!settings.ordered) {
    if (brute_isomorphic(g1, g2)) return true;
    if (settings.quotient_mirror && brute_isomorphic(g1, mirror(g2))) return true;
    if (settings.quotient_flip && brute_isomorphic(g1, flip(g2))) return true;
    if (settings.quotient_mirror && settings.quotient_flip &&
        brute_isomorphic(g1, mirror(flip(g2)))) {
      return true;
    }
    return false;
  }
  if (g1 == g2) return true;
  if (settings.quotient_mirror && g1 == mirror(g2)) return true;
  if (settings.quotient_flip && g1 == flip(g2)) return true;
  if (settings.quotient_mirror && settings.quotient_flip && g1 == mirror(flip(g2))) return true;
  return false;
}

/// Random rank order compatible with the edges (a linear extension),
/// applied as a relabeling; the result is a valid ranked graph again and
/// must have the same unordered class certificate.
inline ReebGraph random_relabel(Rng& rng, const ReebGraph& g) {
  const int v_count = g.vertex_count();
  std::vector<int> remaining_preds(v_count, 0);
  for (const auto& [tail, head] : g.edges()) ++remaining_preds[head];
  std::vector<int> new_rank(v_count, -1);
  std::vector<int> ready;
  for (int v = 0; v < v_count; ++v) {
    if (remaining_preds[v] == 0) ready.push_back(v);
  }
  for (int next = 0; next < v_count; ++next) {
    const int pick = rand_int(rng, 0, static_cast<int>(ready.size()) - 1);
    const int v = ready[pick];
    ready.erase(ready.begin() + pick);
    new_rank[v] = next;
    for (const auto& [tail, head] : g.edges()) {
      if (tail == v && --remaining_preds[head] == 0) ready.push_back(head);
    }
  }
  std::vector<VertexKind> kinds(v_count, VertexKind::kSource);
  for (int v = 0; v < v_count; ++v) kinds[new_rank[v]] = g.kinds()[v];
  std::vector<std::pair<int, int>> edges;
  for (const auto& [tail, head] : g.edges()) {
    edges.emplace_back(new_rank[tail], new_rank[head]);
  }
  return ReebGraph(std::move(kinds), std::move(edges));
}

// ---------------------------------------------------------------------------
// Build-invariant checker shared by the sweep property tests and the
// acceptance suite. Throws std::runtime_error naming the first violated
// invariant.

inline void require(bool condition, const std::string& label) {
  if (!condition) throw std::runtime_error("invariant violated: " + label);
}

inline void check_build_invariants(const PolygonWithHoles& poly) {
  const BuildResult result = build(poly);
  const int m = poly.vertex_count();
  const int n = poly.connectivity();

  require(result.graph.vertex_count() == m, "graph vertex count equals polygon vertex count");
  require(static_cast<int>(result.map.cells.size()) ==
              static_cast<int>(result.graph.edges().size()),
          "one cell per graph edge");
  require(static_cast<int>(result.graph.edges().size()) == m + n - 2,
          "edge count equals V + connectivity - 2");

  Rational total = 0;
  for (const Trapezoid& cell : result.map.cells) total += cell_area(poly, cell);
  require(total == net_area(poly), "cell areas sum to the net area exactly");

  require(result.map.map_vertex_count ==
              m + static_cast<int>(result.map.inserted_segments.size()),
          "map vertex count = polygon vertices + extension endpoints");
  require(result.map.map_vertex_count <= 3 * m - 4, "map vertex count <= 3m - 4");

  for (const Trapezoid& cell : result.map.cells) {
    const Rational y_lo = poly.vertex(cell.lower_vertex).y;
    const Rational y_hi = poly.vertex(cell.upper_vertex).y;
    require(y_lo < y_hi, "cell heights ascend");
    require(cell.bottom_span.lo <= cell.bottom_span.hi, "bottom span ordered");
    require(cell.top_span.lo <= cell.top_span.hi, "top span ordered");
    for (const EdgeRef wall : {cell.left_wall, cell.right_wall}) {
      const Ring& ring = poly.ring(wall.ring);
      const Segment seg{ring[wall.index], ring[(wall.index + 1) % ring.size()]};
      const auto [lo, hi] = std::minmax(seg.a.y, seg.b.y);
      require(lo <= y_lo && y_hi <= hi, "wall spans the full cell height");
    }
    // A degenerate span happens only at a source (bottom) or sink (top).
    const VertexKind lower_kind =
        result.graph.kinds()[result.graph.edges()[cell.reeb_edge].first];
    const VertexKind upper_kind =
        result.graph.kinds()[result.graph.edges()[cell.reeb_edge].second];
    if (cell.bottom_span.lo == cell.bottom_span.hi) {
      require(lower_kind == VertexKind::kSource, "point bottom span only at sources");
    }
    if (cell.top_span.lo == cell.top_span.hi) {
      require(upper_kind == VertexKind::kSink, "point top span only at sinks");
    }
  }

  // Reflections commute with the construction.
  const std::string mirrored_build = certificate(build(reflect_x(poly)).graph);
  require(mirrored_build == certificate(mirror(result.graph)),
          "x-reflection builds the mirrored graph");
  const std::string flipped_build = certificate(build(reflect_y(poly)).graph);
  require(flipped_build == certificate(flip(result.graph)),
          "y-reflection builds the flipped graph");
}

}  // namespace reebtrap::testing
