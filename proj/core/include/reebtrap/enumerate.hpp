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

#include <cstddef>
#include <string>
#include <vector>

#include "reebtrap/sweep.hpp"

namespace reebtrap {

/// Height ranks and horizontal placement of one triangular hole. Ranks
/// are positions in the global ascending height order; the middle vertex
/// sits on the given side of the hole; slot is the hole's left-to-right
/// position among all holes.
struct HoleSpec {
  int rank_top = 0;
  int rank_mid = 0;
  int rank_bottom = 0;
  Side side = Side::kRight;
  int slot = 0;

  bool operator==(const HoleSpec&) const = default;
};

/// Combinatorial description of a triangle with triangular holes: ranks 0
/// and 3n-1 belong to the outer bottom and top vertices, and the ranks
/// 1..3n-2 are split between the outer middle vertex and the holes.
struct Configuration {
  int connectivity = 1;
  int b_rank = 1;
  Side b_side = Side::kRight;
  std::vector<HoleSpec> holes;  // ordered by slot

  bool operator==(const Configuration&) const = default;
};

std::string to_string(const Configuration& config);

/// Every valid configuration for the given connectivity, exactly once, in
/// a fixed deterministic order. Counts: 2 for n=1, 16 for n=2, 1120 for
/// n=3.
std::vector<Configuration> generate_configs(int connectivity);

class RealizationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OptimalityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The vertex kinds, by rank, that a realization of the configuration
/// must produce.
std::vector<VertexKind> expected_kinds(const Configuration& config);

/// Builds a polygon in general position whose height order, middle-vertex
/// sides, and hole slot order realize the configuration exactly (heights
/// equal ranks). The result is revalidated and its vertex classification
/// checked; any mismatch raises RealizationFailed.
PolygonWithHoles realize(const Configuration& config);

struct ClassEntry {
  std::string certificate;  // class certificate under the run's settings
  Configuration representative;  // earliest configuration in generation order
  std::size_t representative_index = 0;
};

struct ClassReport {
  int connectivity = 1;
  EquivalenceSettings settings;
  std::size_t configuration_count = 0;
  std::vector<ClassEntry> classes;  // sorted by certificate
};

/// Realizes every configuration, builds its graph, asserts optimality,
/// and deduplicates by class certificate. The result is independent of
/// generation order and of the worker count.
ClassReport enumerate_classes(int connectivity, const EquivalenceSettings& settings,
                              int workers = 1);

struct ArrangementRow {
  std::string signature;
  int class_count = 0;
};

/// Classes of the n=3 run grouped by the shape of their representative
/// configuration, plus totals split by whether the two holes' height
/// spans are disjoint or overlap.
struct ArrangementReport {
  std::vector<ArrangementRow> rows;  // sorted by signature
  int disjoint_span_classes = 0;
  int overlapping_span_classes = 0;
  int total_classes = 0;
  int mixed_regime_classes = 0;  // classes seen in both regimes (expected 0)
};

ArrangementReport arrangement_report(const EquivalenceSettings& settings);

struct ClosureSizeCount {
  int size = 0;
  std::size_t unordered_classes = 0;
  std::size_t ordered_classes = 0;
};

struct ClosureReport {
  int max_vertices = 0;
  std::vector<ClosureSizeCount> sizes;  // 3..max_vertices
};

/// Starting from the 3-vertex graphs, closes under subdivision and leaf
/// attachment, deduplicating by class certificate; counts are reported
/// for the unordered and ordered settings side by side (mirror and flip
/// quotients enabled in both).
ClosureReport closure_simple(int max_vertices);

}  // namespace reebtrap
