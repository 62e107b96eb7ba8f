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

#include "reebtrap/reeb_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace reebtrap {

namespace {

struct Degrees {
  int in = 0;
  int out = 0;
};

void expected_degrees(VertexKind kind, int& in, int& out) {
  switch (kind) {
    case VertexKind::kSource: in = 0; out = 1; return;
    case VertexKind::kSink: in = 1; out = 0; return;
    case VertexKind::kRegularLeft:
    case VertexKind::kRegularRight: in = 1; out = 1; return;
    case VertexKind::kMerge: in = 2; out = 1; return;
    case VertexKind::kSplit: in = 1; out = 2; return;
  }
  throw std::logic_error("unknown vertex kind");
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

std::string edges_text(const std::vector<std::pair<int, int>>& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ';';
    out += '(';
    out += std::to_string(edges[i].first);
    out += ',';
    out += std::to_string(edges[i].second);
    out += ')';
  }
  return out;
}

std::string serialize(const std::vector<VertexKind>& kinds,
                      const std::vector<std::pair<int, int>>& sorted_edges) {
  std::string out = "RG1|V=" + std::to_string(kinds.size()) + "|kinds=";
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (i) out += ',';
    out += kind_code(kinds[i]);
  }
  out += "|edges=";
  out += edges_text(sorted_edges);
  return out;
}

/// Kinds in certificate-code order: me < rl < rr < si < so < sp.
constexpr std::array<VertexKind, 6> kKindsByCode = {
    VertexKind::kMerge,        VertexKind::kRegularLeft, VertexKind::kRegularRight,
    VertexKind::kSink,         VertexKind::kSource,      VertexKind::kSplit,
};

/// Lexicographically minimal serialization over every vertex relabeling
/// that preserves kinds and edge direction. The kind sequence of any such
/// relabeling can always be sorted into code order, so the search runs
/// over per-kind-block permutations only; graphs here are small enough
/// for the exhaustive scan.
std::string canonical_certificate(const ReebGraph& g) {
  std::vector<std::vector<int>> blocks;
  std::vector<VertexKind> canonical_kinds;
  for (VertexKind kind : kKindsByCode) {
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.kinds()[v] == kind) members.push_back(v);
    }
    for (std::size_t i = 0; i < members.size(); ++i) canonical_kinds.push_back(kind);
    if (!members.empty()) blocks.push_back(std::move(members));
  }

  std::vector<int> new_index(g.vertex_count());
  std::vector<std::pair<int, int>> best;
  std::vector<std::pair<int, int>> mapped(g.edges().size());

  auto consider = [&]() {
    int position = 0;
    for (const auto& block : blocks) {
      for (int old_id : block) new_index[old_id] = position++;
    }
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      mapped[i] = {new_index[g.edges()[i].first], new_index[g.edges()[i].second]};
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  };

  // Odometer over the per-block permutations.
  std::size_t spinning = 0;
  consider();
  while (spinning < blocks.size()) {
    if (std::next_permutation(blocks[spinning].begin(), blocks[spinning].end())) {
      spinning = 0;
      consider();
    } else {
      ++spinning;
    }
  }
  return serialize(canonical_kinds, best);
}

}  // namespace

ReebGraph::ReebGraph(std::vector<VertexKind> kinds, std::vector<std::pair<int, int>> edges)
    : kinds_(std::move(kinds)), edges_(std::move(edges)) {
  const int v_count = vertex_count();
  if (v_count == 0) throw std::invalid_argument("ReebGraph: no vertices");

  std::vector<Degrees> degrees(v_count);
  std::vector<int> parent(v_count);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [tail, head] : edges_) {
    if (tail < 0 || head >= v_count || tail >= head) {
      throw std::invalid_argument("ReebGraph: edge must ascend between valid ranks");
    }
    ++degrees[tail].out;
    ++degrees[head].in;
    parent[find_root(parent, tail)] = find_root(parent, head);
  }
  for (int v = 0; v < v_count; ++v) {
    int in = 0, out = 0;
    expected_degrees(kinds_[v], in, out);
    if (degrees[v].in != in || degrees[v].out != out) {
      throw std::invalid_argument("ReebGraph: vertex " + std::to_string(v) + " (" +
                                  kind_name(kinds_[v]) + ") violates the degree law");
    }
  }
  for (int v = 0; v < v_count; ++v) {
    if (find_root(parent, v) != find_root(parent, 0)) {
      throw std::invalid_argument("ReebGraph: not connected");
    }
  }
}

bool ReebGraph::operator==(const ReebGraph& other) const {
  if (kinds_ != other.kinds_) return false;
  std::vector<std::pair<int, int>> a = edges_;
  std::vector<std::pair<int, int>> b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string certificate(const ReebGraph& g) {
  std::vector<std::pair<int, int>> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end());
  return serialize(g.kinds(), sorted);
}

ReebGraph mirror(const ReebGraph& g) {
  std::vector<VertexKind> kinds = g.kinds();
  for (VertexKind& kind : kinds) {
    if (kind == VertexKind::kRegularLeft) kind = VertexKind::kRegularRight;
    else if (kind == VertexKind::kRegularRight) kind = VertexKind::kRegularLeft;
  }
  return ReebGraph(std::move(kinds), g.edges());
}

ReebGraph flip(const ReebGraph& g) {
  const int v_count = g.vertex_count();
  std::vector<VertexKind> kinds(v_count);
  for (int v = 0; v < v_count; ++v) {
    VertexKind kind = g.kinds()[v_count - 1 - v];
    switch (kind) {
      case VertexKind::kSource: kind = VertexKind::kSink; break;
      case VertexKind::kSink: kind = VertexKind::kSource; break;
      case VertexKind::kMerge: kind = VertexKind::kSplit; break;
      case VertexKind::kSplit: kind = VertexKind::kMerge; break;
      default: break;  // regular marks are preserved
    }
    kinds[v] = kind;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [tail, head] : g.edges()) {
    edges.emplace_back(v_count - 1 - head, v_count - 1 - tail);
  }
  return ReebGraph(std::move(kinds), std::move(edges));
}

std::string class_certificate(const ReebGraph& g, const EquivalenceSettings& settings) {
  std::string best;
  auto consider = [&](const ReebGraph& variant) {
    std::string cert = settings.ordered ? certificate(variant) : canonical_certificate(variant);
    if (best.empty() || cert < best) best = std::move(cert);
  };
  consider(g);
  if (settings.quotient_mirror) consider(mirror(g));
  if (settings.quotient_flip) consider(flip(g));
  if (settings.quotient_mirror && settings.quotient_flip) consider(mirror(flip(g)));
  return best;
}

bool is_optimal(const ReebGraph& g, int connectivity) {
  if (connectivity < 1 || g.cycle_rank() != connectivity - 1) {
    throw std::invalid_argument("is_optimal: cycle rank does not match connectivity - 1");
  }
  if (g.vertex_count() != 3 * connectivity) return false;

  std::vector<int> degree(g.vertex_count(), 0);
  for (const auto& [tail, head] : g.edges()) {
    ++degree[tail];
    ++degree[head];
  }
  int regular = 0, sources = 0, sinks = 0, saddles = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const VertexKind kind = g.kinds()[v];
    switch (degree[v]) {
      case 1:
        if (kind == VertexKind::kSource) ++sources;
        else if (kind == VertexKind::kSink) ++sinks;
        else return false;
        break;
      case 2:
        if (kind != VertexKind::kRegularLeft && kind != VertexKind::kRegularRight) return false;
        ++regular;
        break;
      case 3:
        if (kind != VertexKind::kMerge && kind != VertexKind::kSplit) return false;
        ++saddles;
        break;
      default:
        return false;
    }
  }
  return sources == 1 && sinks == 1 && regular == connectivity &&
         saddles == 2 * connectivity - 2;
}

ReebGraph subdivide(const ReebGraph& g, std::pair<int, int> edge, Side mark, int rank_slot) {
  const auto found = std::find(g.edges().begin(), g.edges().end(), edge);
  if (found == g.edges().end()) {
    throw std::invalid_argument("subdivide: edge not present");
  }
  if (rank_slot <= edge.first || rank_slot > edge.second) {
    throw std::invalid_argument("subdivide: rank_slot outside the edge's rank interval");
  }

  auto shift = [rank_slot](int rank) { return rank >= rank_slot ? rank + 1 : rank; };
  std::vector<VertexKind> kinds;
  kinds.reserve(g.kinds().size() + 1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == rank_slot) {
      kinds.push_back(mark == Side::kLeft ? VertexKind::kRegularLeft
                                          : VertexKind::kRegularRight);
    }
    kinds.push_back(g.kinds()[v]);
  }
  if (rank_slot == g.vertex_count()) {
    kinds.push_back(mark == Side::kLeft ? VertexKind::kRegularLeft : VertexKind::kRegularRight);
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size() + 1);
  const std::size_t split_index = static_cast<std::size_t>(found - g.edges().begin());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto [tail, head] = g.edges()[i];
    if (i == split_index) {
      edges.emplace_back(tail, rank_slot);
      edges.emplace_back(rank_slot, shift(head));
    } else {
      edges.emplace_back(shift(tail), shift(head));
    }
  }
  return ReebGraph(std::move(kinds), std::move(edges));
}

ReebGraph attach_leaf(const ReebGraph& g, int at_rank, VertexKind leaf_kind, int rank_slot) {
  if (at_rank < 0 || at_rank >= g.vertex_count()) {
    throw std::invalid_argument("attach_leaf: target rank out of range");
  }
  const VertexKind target = g.kinds()[at_rank];
  if (target != VertexKind::kRegularLeft && target != VertexKind::kRegularRight) {
    throw std::invalid_argument("attach_leaf: target vertex is not regular");
  }
  const bool source_leaf = leaf_kind == VertexKind::kSource;
  if (!source_leaf && leaf_kind != VertexKind::kSink) {
    throw std::invalid_argument("attach_leaf: leaf must be a source or a sink");
  }
  // The new vertex must land strictly below (source) or above (sink) the
  // target in the widened rank order.
  if (source_leaf ? (rank_slot < 0 || rank_slot > at_rank)
                  : (rank_slot <= at_rank || rank_slot > g.vertex_count())) {
    throw std::invalid_argument("attach_leaf: rank_slot on the wrong side of the target");
  }

  auto shift = [rank_slot](int rank) { return rank >= rank_slot ? rank + 1 : rank; };
  std::vector<VertexKind> kinds;
  kinds.reserve(g.kinds().size() + 1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == rank_slot) kinds.push_back(leaf_kind);
    kinds.push_back(g.kinds()[v]);
  }
  if (rank_slot == g.vertex_count()) kinds.push_back(leaf_kind);

  const int target_rank = shift(at_rank);
  kinds[target_rank] = source_leaf ? VertexKind::kMerge : VertexKind::kSplit;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size() + 1);
  for (const auto& [tail, head] : g.edges()) {
    edges.emplace_back(shift(tail), shift(head));
  }
  if (source_leaf) {
    edges.emplace_back(rank_slot, target_rank);
  } else {
    edges.emplace_back(target_rank, rank_slot);
  }
  return ReebGraph(std::move(kinds), std::move(edges));
}

bool equivalent(const ReebGraph& g1, const ReebGraph& g2, const EquivalenceSettings& settings) {
  return class_certificate(g1, settings) == class_certificate(g2, settings);
}

}  // namespace reebtrap
