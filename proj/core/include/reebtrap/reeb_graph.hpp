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

#include <string>
#include <utility>
#include <vector>

#include "reebtrap/polygon.hpp"

namespace reebtrap {

/// Oriented multigraph of fiber classes of the height function. Vertices
/// are indexed by rank (position in ascending height order) and typed by
/// VertexKind; edges are ordered (tail, head) pairs with tail < head, one
/// per trapezoid when built from a polygon.
///
/// Invariants (enforced on construction):
///   - every edge ascends: tail < head
///   - in/out degree by kind: source (0,1), sink (1,0), regular (1,1),
///     merge (2,1), split (1,2)
///   - the underlying graph is connected
class ReebGraph {
 public:
  ReebGraph(std::vector<VertexKind> kinds, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(kinds_.size()); }
  const std::vector<VertexKind>& kinds() const { return kinds_; }

  /// Edge multiset; the position of an edge in this vector is its id
  /// (sweep construction order when built from a polygon).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// First Betti number: |edges| - V + 1. Equals connectivity - 1 for
  /// graphs built from polygons.
  int cycle_rank() const { return static_cast<int>(edges_.size()) - vertex_count() + 1; }

  /// Equality as ranked graphs: same kinds, same edge multiset. Edge ids
  /// (vector positions) are construction detail, not value.
  bool operator==(const ReebGraph& other) const;

 private:
  std::vector<VertexKind> kinds_;
  std::vector<std::pair<int, int>> edges_;
};

/// Which symmetries are quotiented out and whether vertex ranks matter.
/// ordered=false compares graphs up to kind-preserving isomorphism of
/// oriented graphs; ordered=true compares full rank sequences.
struct EquivalenceSettings {
  bool ordered = false;
  bool quotient_mirror = true;
  bool quotient_flip = true;
};

/// Deterministic serialization of the ranked graph:
///   RG1|V=<n>|kinds=<k0,...>|edges=(t,h);(t,h);...
/// with kind codes {so,si,rl,rr,me,sp} and edges sorted as pairs;
/// parallel edges repeat. Equal certificates <=> identical ranked graphs.
std::string certificate(const ReebGraph& g);

/// Reflection about a vertical axis: swaps regular_left <-> regular_right.
ReebGraph mirror(const ReebGraph& g);

/// Reflection about a horizontal axis: reverses ranks and edges, swaps
/// source <-> sink and merge <-> split, keeps regular marks.
ReebGraph flip(const ReebGraph& g);

/// The dedup key for classification: minimum certificate over the enabled
/// symmetry group, additionally minimized over all kind-preserving vertex
/// relabelings when settings.ordered is false.
std::string class_certificate(const ReebGraph& g, const EquivalenceSettings& settings);

/// True iff g has the minimal shape for the given boundary connectivity:
/// 3n vertices of which n are regular (degree 2), one source and one sink
/// (degree 1), and 2n-2 merges/splits (degree 3). Throws
/// std::invalid_argument when cycle_rank(g) != n - 1.
bool is_optimal(const ReebGraph& g, int connectivity);

/// Splits an edge with a new regular vertex of the given mark at
/// rank_slot (tail < rank_slot <= head; ranks >= rank_slot shift up).
ReebGraph subdivide(const ReebGraph& g, std::pair<int, int> edge, Side mark, int rank_slot);

/// Attaches a degree-1 leaf to a regular vertex, turning it into a merge
/// (source leaf, rank_slot <= target rank) or split (sink leaf,
/// rank_slot > target rank).
ReebGraph attach_leaf(const ReebGraph& g, int at_rank, VertexKind leaf_kind, int rank_slot);

bool equivalent(const ReebGraph& g1, const ReebGraph& g2, const EquivalenceSettings& settings);

}  // namespace reebtrap
