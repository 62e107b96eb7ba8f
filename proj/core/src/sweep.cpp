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

#include "reebtrap/sweep.hpp"

#include <algorithm>
#include <utility>

namespace reebtrap {

namespace {

/*
 * Invariants of the active structure between events:
 *  - components are the connected pieces of the region at the sweep level,
 *    listed left to right as pairwise disjoint x-intervals;
 *  - each component's walls are the polygon edges bounding it, and both
 *    walls span every level from the component's birth to the current one;
 *  - each component owns one open graph edge whose tail is the event that
 *    opened it. Closing a component emits its trapezoid and seals the edge,
 *    which keeps the cell <-> edge correspondence one to one.
 */
struct ActiveComponent {
  EdgeRef left_wall;
  EdgeRef right_wall;
  VertexRef lower_vertex;
  Interval bottom_span;
  int reeb_edge = -1;
};

class Sweep {
 public:
  explicit Sweep(const PolygonWithHoles& poly) : poly_(poly) {}

  BuildResult run() {
    collect_events();
    for (rank_ = 0; rank_ < static_cast<int>(events_.size()); ++rank_) {
      dispatch(events_[rank_]);
    }
    if (!active_.empty()) {
      throw InternalInvariantViolation("sweep: components left open after the last event");
    }
    for (const auto& [tail, head] : edges_) {
      if (head < 0) throw InternalInvariantViolation("sweep: unclosed graph edge");
    }

    TrapezoidalMap map;
    map.cells = std::move(cells_);
    map.inserted_segments = std::move(segments_);
    map.map_vertex_count =
        poly_.vertex_count() + static_cast<int>(map.inserted_segments.size());
    return BuildResult{ReebGraph(std::move(kinds_), std::move(edges_)), std::move(map),
                       std::move(events_)};
  }

 private:
  Segment segment_of(EdgeRef e) const {
    const Ring& ring = poly_.ring(e.ring);
    return Segment{ring[e.index], ring[(e.index + 1) % ring.size()]};
  }

  Rational wall_x(EdgeRef e, const Rational& y) const {
    return edge_x_at_level(segment_of(e), y);
  }

  void collect_events() {
    for (int r = 0; r < poly_.ring_count(); ++r) {
      for (int v = 0; v < static_cast<int>(poly_.ring(r).size()); ++v) {
        events_.push_back(VertexRef{r, v});
      }
    }
    std::sort(events_.begin(), events_.end(), [this](VertexRef a, VertexRef b) {
      return poly_.vertex(a).y < poly_.vertex(b).y;
    });
    kinds_.reserve(events_.size());
    for (const VertexRef ref : events_) {
      kinds_.push_back(classify_vertex(poly_, ref.ring, ref.index));
    }
  }

  int open_edge() {
    edges_.emplace_back(rank_, -1);
    return static_cast<int>(edges_.size()) - 1;
  }

  void close_component(std::size_t index, VertexRef upper, Interval top_span) {
    ActiveComponent& comp = active_[index];
    edges_[comp.reeb_edge].second = rank_;
    cells_.push_back(Trapezoid{comp.lower_vertex, upper, comp.left_wall, comp.right_wall,
                               comp.bottom_span, std::move(top_span), comp.reeb_edge});
  }

  void add_ray(VertexRef vertex, Side direction, Rational x, const Rational& y) {
    if (x == poly_.vertex(vertex).x) {
      throw InternalInvariantViolation("sweep: zero-length horizontal extension");
    }
    segments_.push_back(InsertedSegment{vertex, direction, Point{std::move(x), y}});
  }

  void dispatch(VertexRef u) {
    const Ring& ring = poly_.ring(u.ring);
    const int n = static_cast<int>(ring.size());
    const Point& p = ring[u.index];
    const EdgeRef edge_in{u.ring, (u.index + n - 1) % n};
    const EdgeRef edge_out{u.ring, u.index};

    switch (kinds_[rank_]) {
      case VertexKind::kSource: {
        // Incoming edge ascends on the left boundary of the new wedge.
        std::size_t pos = 0;
        while (pos < active_.size() && wall_x(active_[pos].left_wall, p.y) < p.x) ++pos;
        active_.insert(active_.begin() + pos,
                       ActiveComponent{edge_in, edge_out, u, Interval{p.x, p.x}, open_edge()});
        return;
      }
      case VertexKind::kSink: {
        for (std::size_t i = 0; i < active_.size(); ++i) {
          if (active_[i].left_wall == edge_out && active_[i].right_wall == edge_in) {
            close_component(i, u, Interval{p.x, p.x});
            active_.erase(active_.begin() + i);
            return;
          }
        }
        throw InternalInvariantViolation("sweep: sink does not terminate a component");
      }
      case VertexKind::kSplit: {
        for (std::size_t i = 0; i < active_.size(); ++i) {
          Rational left_x = wall_x(active_[i].left_wall, p.y);
          if (left_x >= p.x) continue;
          Rational right_x = wall_x(active_[i].right_wall, p.y);
          if (right_x <= p.x) continue;
          close_component(i, u, Interval{left_x, right_x});
          add_ray(u, Side::kLeft, left_x, p.y);
          add_ray(u, Side::kRight, right_x, p.y);
          const EdgeRef outer_left = active_[i].left_wall;
          const EdgeRef outer_right = active_[i].right_wall;
          active_[i] = ActiveComponent{outer_left, edge_out, u,
                                       Interval{std::move(left_x), p.x}, open_edge()};
          active_.insert(active_.begin() + i + 1,
                         ActiveComponent{edge_in, outer_right, u,
                                         Interval{p.x, std::move(right_x)}, open_edge()});
          return;
        }
        throw InternalInvariantViolation("sweep: split vertex outside every component");
      }
      case VertexKind::kMerge: {
        for (std::size_t i = 0; i + 1 < active_.size(); ++i) {
          if (active_[i].right_wall != edge_in) continue;
          if (active_[i + 1].left_wall != edge_out) {
            throw InternalInvariantViolation("sweep: merge flanks are not adjacent");
          }
          Rational left_x = wall_x(active_[i].left_wall, p.y);
          Rational right_x = wall_x(active_[i + 1].right_wall, p.y);
          close_component(i, u, Interval{left_x, p.x});
          close_component(i + 1, u, Interval{p.x, right_x});
          add_ray(u, Side::kLeft, left_x, p.y);
          add_ray(u, Side::kRight, right_x, p.y);
          const EdgeRef outer_left = active_[i].left_wall;
          const EdgeRef outer_right = active_[i + 1].right_wall;
          active_[i] = ActiveComponent{outer_left, outer_right, u,
                                       Interval{std::move(left_x), std::move(right_x)},
                                       open_edge()};
          active_.erase(active_.begin() + i + 1);
          return;
        }
        throw InternalInvariantViolation("sweep: merge edges not found on adjacent components");
      }
      case VertexKind::kRegularLeft:
      case VertexKind::kRegularRight: {
        const bool ascending = poly_.vertex(VertexRef{u.ring, (u.index + n - 1) % n}).y < p.y;
        const EdgeRef below = ascending ? edge_in : edge_out;
        const EdgeRef above = ascending ? edge_out : edge_in;
        for (std::size_t i = 0; i < active_.size(); ++i) {
          if (active_[i].left_wall == below) {
            Rational right_x = wall_x(active_[i].right_wall, p.y);
            close_component(i, u, Interval{p.x, right_x});
            add_ray(u, Side::kRight, right_x, p.y);
            active_[i] = ActiveComponent{above, active_[i].right_wall, u,
                                         Interval{p.x, std::move(right_x)}, open_edge()};
            return;
          }
          if (active_[i].right_wall == below) {
            Rational left_x = wall_x(active_[i].left_wall, p.y);
            close_component(i, u, Interval{left_x, p.x});
            add_ray(u, Side::kLeft, left_x, p.y);
            active_[i] = ActiveComponent{active_[i].left_wall, above, u,
                                         Interval{std::move(left_x), p.x}, open_edge()};
            return;
          }
        }
        throw InternalInvariantViolation("sweep: regular vertex not on any wall");
      }
    }
    throw InternalInvariantViolation("sweep: unhandled vertex kind");
  }

  const PolygonWithHoles& poly_;
  std::vector<VertexRef> events_;
  std::vector<VertexKind> kinds_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<ActiveComponent> active_;
  std::vector<Trapezoid> cells_;
  std::vector<InsertedSegment> segments_;
  int rank_ = 0;
};

}  // namespace

BuildResult build(const PolygonWithHoles& poly) { return Sweep(poly).run(); }

Rational cell_area(const PolygonWithHoles& poly, const Trapezoid& cell) {
  const Rational bottom = cell.bottom_span.hi - cell.bottom_span.lo;
  const Rational top = cell.top_span.hi - cell.top_span.lo;
  const Rational height =
      poly.vertex(cell.upper_vertex).y - poly.vertex(cell.lower_vertex).y;
  return (bottom + top) * height / 2;
}

}  // namespace reebtrap
