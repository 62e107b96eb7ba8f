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

#include <optional>
#include <string>
#include <vector>

#include "reebtrap/enumerate.hpp"
#include "reebtrap/sweep.hpp"

namespace reebtrap::io {

/// A polygon file: {"outer": [[x, y], ...], "holes": [[[x, y], ...], ...]}.
/// Coordinates are JSON integers or strings holding an integer, a finite
/// decimal, or a fraction "p/q". Non-integer JSON number literals are
/// rejected so no value ever passes through binary floating point.
struct PolygonDocument {
  Ring outer;
  std::vector<Ring> holes;
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PolygonDocument parse_polygon_document(const std::string& text);
std::string write_polygon_document(const PolygonWithHoles& poly);

struct GraphDocument {
  ReebGraph graph;
  std::vector<Point> positions;  // by rank
  std::string certificate;       // as stored in the file
};

std::string write_graph_document(const PolygonWithHoles& poly, const BuildResult& result);
GraphDocument parse_graph_document(const std::string& text);

/// Graphviz text; nodes carry rank and kind, edges point from lower to
/// higher rank.
std::string write_dot(const BuildResult& result);

/// SVG drawing with mathematical orientation (y up): boundaries solid
/// black, horizontal extensions red dashed, graph vertices as dots and
/// graph edges as polylines through the cell midlines.
std::string write_svg(const PolygonWithHoles& poly, const BuildResult& result);

/// Exact decimal rendering (long division), trimmed of trailing zeros,
/// at most max_fraction_digits after the point.
std::string format_decimal(const Rational& value, int max_fraction_digits);

std::string settings_label(const EquivalenceSettings& settings);

std::string render_class_report(const ClassReport& report,
                                std::optional<int> reference_count);
std::string render_arrangement_report(const ArrangementReport& report,
                                      std::optional<int> reference_disjoint,
                                      std::optional<int> reference_overlapping);
std::string render_closure_report(const ClosureReport& report);

}  // namespace reebtrap::io
