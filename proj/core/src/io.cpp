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

#include "reebtrap/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <utility>

namespace reebtrap::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational coordinate(const json& value, const std::string& where) {
  if (value.is_number_integer() || value.is_number_unsigned()) {
    return parse_rational(value.dump());
  }
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& err) {
      throw DocumentError(where + ": " + err.what());
    }
  }
  if (value.is_number_float()) {
    throw DocumentError(where +
                        ": non-integer number literals are not exact; quote the value "
                        "as a string (\"3.25\" or \"13/4\")");
  }
  throw DocumentError(where + ": expected a number or a numeric string");
}

Ring parse_ring(const json& value, const std::string& where) {
  if (!value.is_array()) throw DocumentError(where + ": expected an array of [x, y] pairs");
  Ring ring;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& pair = value[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw DocumentError(at + ": expected an [x, y] pair");
    }
    ring.push_back(Point{coordinate(pair[0], at + ".x"), coordinate(pair[1], at + ".y")});
  }
  return ring;
}

VertexKind kind_from_name(const std::string& name, const std::string& where) {
  static const std::map<std::string, VertexKind> kByName = {
      {"source", VertexKind::kSource},
      {"sink", VertexKind::kSink},
      {"regular_left", VertexKind::kRegularLeft},
      {"regular_right", VertexKind::kRegularRight},
      {"merge", VertexKind::kMerge},
      {"split", VertexKind::kSplit},
  };
  const auto it = kByName.find(name);
  if (it == kByName.end()) throw DocumentError(where + ": unknown vertex kind '" + name + "'");
  return it->second;
}

ordered_json ring_to_json(const Ring& ring) {
  ordered_json out = ordered_json::array();
  for (const Point& p : ring) {
    out.push_back({to_string(p.x), to_string(p.y)});
  }
  return out;
}

}  // namespace

PolygonDocument parse_polygon_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw DocumentError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("outer")) {
    throw DocumentError("document must be an object with an \"outer\" ring");
  }
  PolygonDocument out;
  out.outer = parse_ring(doc["outer"], "outer");
  if (doc.contains("holes")) {
    const json& holes = doc["holes"];
    if (!holes.is_array()) throw DocumentError("holes: expected an array of rings");
    for (std::size_t i = 0; i < holes.size(); ++i) {
      out.holes.push_back(parse_ring(holes[i], "holes[" + std::to_string(i) + "]"));
    }
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "outer" && key != "holes") {
      throw DocumentError("unknown key \"" + key + "\"");
    }
  }
  return out;
}

std::string write_polygon_document(const PolygonWithHoles& poly) {
  ordered_json doc;
  doc["outer"] = ring_to_json(poly.outer());
  doc["holes"] = ordered_json::array();
  for (int r = 1; r < poly.ring_count(); ++r) {
    doc["holes"].push_back(ring_to_json(poly.ring(r)));
  }
  return doc.dump(2) + "\n";
}

std::string write_graph_document(const PolygonWithHoles& poly, const BuildResult& result) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (int rank = 0; rank < result.graph.vertex_count(); ++rank) {
    const Point& p = poly.vertex(result.vertex_by_rank[rank]);
    doc["vertices"].push_back({
        {"id", rank},
        {"rank", rank},
        {"kind", kind_name(result.graph.kinds()[rank])},
        {"x", to_string(p.x)},
        {"y", to_string(p.y)},
    });
  }
  doc["edges"] = ordered_json::array();
  for (const auto& [tail, head] : result.graph.edges()) {
    doc["edges"].push_back({tail, head});
  }
  doc["certificate"] = certificate(result.graph);
  return doc.dump(2) + "\n";
}

GraphDocument parse_graph_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw DocumentError(std::string("invalid JSON: ") + err.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
        !doc.contains("certificate")) {
      throw DocumentError("graph document needs vertices, edges, and certificate");
    }
    const std::size_t count = doc["vertices"].size();
    std::vector<VertexKind> kinds(count, VertexKind::kSource);
    std::vector<Point> positions(count);
    std::vector<bool> seen(count, false);
    for (const json& vertex : doc["vertices"]) {
      const int rank = vertex.at("rank").get<int>();
      if (rank < 0 || rank >= static_cast<int>(count) || seen[rank]) {
        throw DocumentError("vertices: ranks must cover 0..V-1 exactly once");
      }
      seen[rank] = true;
      const std::string where = "vertices[" + std::to_string(rank) + "]";
      kinds[rank] = kind_from_name(vertex.at("kind").get<std::string>(), where);
      positions[rank] = Point{coordinate(vertex.at("x"), where + ".x"),
                              coordinate(vertex.at("y"), where + ".y")};
    }
    std::vector<std::pair<int, int>> edges;
    for (const json& edge : doc["edges"]) {
      if (!edge.is_array() || edge.size() != 2) {
        throw DocumentError("edges: expected [tail, head] pairs");
      }
      edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    GraphDocument out{ReebGraph(std::move(kinds), std::move(edges)), std::move(positions),
                      doc["certificate"].get<std::string>()};
    if (certificate(out.graph) != out.certificate) {
      throw DocumentError("stored certificate does not match the graph");
    }
    return out;
  } catch (const json::exception& err) {
    throw DocumentError(std::string("malformed graph document: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw DocumentError(std::string("invalid graph: ") + err.what());
  }
}

std::string write_dot(const BuildResult& result) {
  std::string out = "digraph reeb {\n  rankdir=BT;\n";
  for (int rank = 0; rank < result.graph.vertex_count(); ++rank) {
    out += "  v" + std::to_string(rank) + " [label=\"" + std::to_string(rank) + ":" +
           kind_name(result.graph.kinds()[rank]) + "\"];\n";
  }
  std::vector<std::pair<int, int>> edges = result.graph.edges();
  std::sort(edges.begin(), edges.end());
  for (const auto& [tail, head] : edges) {
    out += "  v" + std::to_string(tail) + " -> v" + std::to_string(head) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string format_decimal(const Rational& value, int max_fraction_digits) {
  const bool negative = value < 0;
  const Int num = negative ? Int(-numerator(value)) : numerator(value);
  const Int den = denominator(value);
  Int whole = num / den;
  Int rem = num % den;
  std::string digits;
  for (int i = 0; i < max_fraction_digits && rem != 0; ++i) {
    rem *= 10;
    digits += static_cast<char>('0' + (rem / den).convert_to<int>());
    rem %= den;
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  std::string out = whole.str();
  if (!digits.empty()) out += "." + digits;
  if (negative && (whole != 0 || !digits.empty())) out = "-" + out;
  return out;
}

namespace {

std::string svg_point(const Rational& x, const Rational& y_flipped) {
  return format_decimal(x, 4) + "," + format_decimal(y_flipped, 4);
}

}  // namespace

std::string write_svg(const PolygonWithHoles& poly, const BuildResult& result) {
  Rational min_x = poly.outer().front().x, max_x = min_x;
  Rational min_y = poly.outer().front().y, max_y = min_y;
  for (const Ring& ring : poly.rings()) {
    for (const Point& p : ring) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const Rational width = max_x - min_x;
  const Rational height = max_y - min_y;
  const Rational pad_x = width / 20;
  const Rational pad_y = height / 20;
  const Rational dim = std::max(width, height);
  // Mathematical orientation: flip y inside the original bounding box.
  auto flip_y = [&](const Rational& y) -> Rational { return min_y + max_y - y; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += format_decimal(min_x - pad_x, 4) + " " + format_decimal(min_y - pad_y, 4) + " " +
         format_decimal(width + 2 * pad_x, 4) + " " + format_decimal(height + 2 * pad_y, 4) +
         "\">\n";
  const std::string stroke = format_decimal(dim / 200, 6);

  for (const Ring& ring : poly.rings()) {
    out += "  <path d=\"";
    for (std::size_t i = 0; i < ring.size(); ++i) {
      out += (i == 0 ? "M " : " L ");
      out += svg_point(ring[i].x, flip_y(ring[i].y));
    }
    out += " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"" + stroke + "\"/>\n";
  }

  for (const InsertedSegment& segment : result.map.inserted_segments) {
    const Point& from = poly.vertex(segment.vertex);
    out += "  <line class=\"extension\" x1=\"" + format_decimal(from.x, 4) + "\" y1=\"" +
           format_decimal(flip_y(from.y), 4) + "\" x2=\"" +
           format_decimal(segment.endpoint.x, 4) + "\" y2=\"" +
           format_decimal(flip_y(segment.endpoint.y), 4) +
           "\" stroke=\"red\" stroke-width=\"" + stroke + "\" stroke-dasharray=\"" +
           format_decimal(dim / 50, 6) + " " + format_decimal(dim / 100, 6) + "\"/>\n";
  }

  for (const Trapezoid& cell : result.map.cells) {
    const Rational y_bottom = poly.vertex(cell.lower_vertex).y;
    const Rational y_top = poly.vertex(cell.upper_vertex).y;
    const Rational y_mid = (y_bottom + y_top) / 2;
    const Ring& left_ring = poly.ring(cell.left_wall.ring);
    const Segment left{left_ring[cell.left_wall.index],
                       left_ring[(cell.left_wall.index + 1) % left_ring.size()]};
    const Ring& right_ring = poly.ring(cell.right_wall.ring);
    const Segment right{right_ring[cell.right_wall.index],
                        right_ring[(cell.right_wall.index + 1) % right_ring.size()]};
    const Rational mid_x = (edge_x_at_level(left, y_mid) + edge_x_at_level(right, y_mid)) / 2;
    out += "  <polyline class=\"reeb-edge\" points=\"";
    out += svg_point((cell.bottom_span.lo + cell.bottom_span.hi) / 2, flip_y(y_bottom));
    out += " " + svg_point(mid_x, flip_y(y_mid));
    out += " " + svg_point((cell.top_span.lo + cell.top_span.hi) / 2, flip_y(y_top));
    out += "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + stroke + "\"/>\n";
  }

  for (int rank = 0; rank < result.graph.vertex_count(); ++rank) {
    const Point& p = poly.vertex(result.vertex_by_rank[rank]);
    out += "  <circle cx=\"" + format_decimal(p.x, 4) + "\" cy=\"" +
           format_decimal(flip_y(p.y), 4) + "\" r=\"" + format_decimal(dim / 120, 6) +
           "\" fill=\"black\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string settings_label(const EquivalenceSettings& settings) {
  std::string out = settings.ordered ? "ordered" : "unordered";
  if (settings.quotient_mirror) out += "+mirror";
  if (settings.quotient_flip) out += "+flip";
  return out;
}

std::string render_class_report(const ClassReport& report,
                                std::optional<int> reference_count) {
  std::string out = "connectivity=" + std::to_string(report.connectivity) +
                    " settings=" + settings_label(report.settings) + "\n";
  out += "configurations=" + std::to_string(report.configuration_count) + "\n";
  out += "classes=" + std::to_string(report.classes.size());
  if (reference_count) out += " (reference: " + std::to_string(*reference_count) + ")";
  out += "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    out += "class " + std::to_string(i + 1) + ": " + report.classes[i].certificate + "\n";
    out += "  representative: " + to_string(report.classes[i].representative) + "\n";
  }
  return out;
}

std::string render_arrangement_report(const ArrangementReport& report,
                                      std::optional<int> reference_disjoint,
                                      std::optional<int> reference_overlapping) {
  std::string out = "arrangement groups (each class is counted at its representative):\n";
  for (const ArrangementRow& row : report.rows) {
    out += "  " + row.signature + " classes=" + std::to_string(row.class_count) + "\n";
  }
  out += "regime disjoint-spans: " + std::to_string(report.disjoint_span_classes);
  if (reference_disjoint) out += " (reference: " + std::to_string(*reference_disjoint) + ")";
  out += "\nregime overlapping-spans: " + std::to_string(report.overlapping_span_classes);
  if (reference_overlapping) {
    out += " (reference: " + std::to_string(*reference_overlapping) + ")";
  }
  out += "\nregime total: " + std::to_string(report.total_classes) + "\n";
  out += "mixed-regime classes: " + std::to_string(report.mixed_regime_classes) + "\n";
  return out;
}

std::string render_closure_report(const ClosureReport& report) {
  std::string out = "closure of the 3-vertex graphs under subdivision and leaf attachment\n";
  for (const ClosureSizeCount& row : report.sizes) {
    out += "size=" + std::to_string(row.size) +
           " unordered=" + std::to_string(row.unordered_classes) +
           " ordered=" + std::to_string(row.ordered_classes);
    if (row.size == 3) out += " (reference: 1)";
    if (row.size == 4) out += " (reference: 3)";
    if (row.size == 5) {
      out += " (reference: 6; neither setting reproduces that value - see README)";
    }
    out += "\n";
  }
  return out;
}

}  // namespace reebtrap::io
