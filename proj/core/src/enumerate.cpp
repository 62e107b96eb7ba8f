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

#include "reebtrap/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace reebtrap {

namespace {

const char* side_name(Side side) { return side == Side::kLeft ? "left" : "right"; }

void check_configuration(const Configuration& config) {
  const int n = config.connectivity;
  if (n < 1) throw std::invalid_argument("configuration: connectivity must be positive");
  if (static_cast<int>(config.holes.size()) != n - 1) {
    throw std::invalid_argument("configuration: expected n-1 holes");
  }
  std::set<int> ranks{config.b_rank};
  std::set<int> slots;
  for (const HoleSpec& hole : config.holes) {
    if (!(hole.rank_top > hole.rank_mid && hole.rank_mid > hole.rank_bottom)) {
      throw std::invalid_argument("configuration: hole ranks must descend top > mid > bottom");
    }
    ranks.insert(hole.rank_top);
    ranks.insert(hole.rank_mid);
    ranks.insert(hole.rank_bottom);
    slots.insert(hole.slot);
  }
  if (static_cast<int>(ranks.size()) != 3 * n - 2 || *ranks.begin() != 1 ||
      *ranks.rbegin() != 3 * n - 2) {
    throw std::invalid_argument("configuration: ranks must cover 1..3n-2 exactly once");
  }
  if (static_cast<int>(slots.size()) != n - 1 ||
      (n > 1 && (*slots.begin() != 0 || *slots.rbegin() != n - 2))) {
    throw std::invalid_argument("configuration: slots must cover 0..n-2 exactly once");
  }
}

/// All ways to assign the given ascending ranks to slot-ordered descending
/// triples, in lexicographic order of the leading triple choice.
void triple_partitions(const std::vector<int>& ranks,
                       std::vector<std::vector<int>>& current,
                       std::vector<std::vector<std::vector<int>>>& out) {
  if (ranks.empty()) {
    out.push_back(current);
    return;
  }
  const int count = static_cast<int>(ranks.size());
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      for (int k = j + 1; k < count; ++k) {
        std::vector<int> rest;
        for (int t = 0; t < count; ++t) {
          if (t != i && t != j && t != k) rest.push_back(ranks[t]);
        }
        current.push_back({ranks[i], ranks[j], ranks[k]});
        triple_partitions(rest, current, out);
        current.pop_back();
      }
    }
  }
}

Configuration mirrored(const Configuration& config) {
  Configuration out = config;
  out.b_side = config.b_side == Side::kLeft ? Side::kRight : Side::kLeft;
  const int n = config.connectivity;
  for (HoleSpec& hole : out.holes) {
    hole.side = hole.side == Side::kLeft ? Side::kRight : Side::kLeft;
    hole.slot = (n - 2) - hole.slot;
  }
  std::sort(out.holes.begin(), out.holes.end(),
            [](const HoleSpec& a, const HoleSpec& b) { return a.slot < b.slot; });
  return out;
}

PolygonWithHoles realize_b_right(const Configuration& config) {
  const int n = config.connectivity;
  const Rational width = 1000 * n;
  const Rational top_rank = 3 * n - 1;
  Ring outer{{Rational(1), Rational(0)},
             {width, Rational(config.b_rank)},
             {Rational(2), top_rank}};
  std::vector<Ring> holes;
  for (const HoleSpec& hole : config.holes) {
    const Rational x0 = 10 * (hole.slot + 1);
    const Rational mid_x = hole.side == Side::kRight ? Rational(x0 + 1) : Rational(x0 - 1);
    holes.push_back(Ring{{x0, Rational(hole.rank_bottom)},
                         {mid_x, Rational(hole.rank_mid)},
                         {x0, Rational(hole.rank_top)}});
  }
  return validate(std::move(outer), std::move(holes));
}

}  // namespace

std::string to_string(const Configuration& config) {
  std::string out = "n=" + std::to_string(config.connectivity) +
                    " b_rank=" + std::to_string(config.b_rank) +
                    " b_side=" + side_name(config.b_side);
  for (const HoleSpec& hole : config.holes) {
    out += " hole{slot=" + std::to_string(hole.slot) +
           " top=" + std::to_string(hole.rank_top) +
           " mid=" + std::to_string(hole.rank_mid) +
           " bottom=" + std::to_string(hole.rank_bottom) +
           " side=" + side_name(hole.side) + "}";
  }
  return out;
}

std::vector<Configuration> generate_configs(int connectivity) {
  if (connectivity < 1) {
    throw std::invalid_argument("generate_configs: connectivity must be positive");
  }
  const int n = connectivity;
  std::vector<Configuration> out;
  for (int b_rank = 1; b_rank <= 3 * n - 2; ++b_rank) {
    std::vector<int> rest;
    for (int r = 1; r <= 3 * n - 2; ++r) {
      if (r != b_rank) rest.push_back(r);
    }
    std::vector<std::vector<std::vector<int>>> partitions;
    std::vector<std::vector<int>> scratch;
    triple_partitions(rest, scratch, partitions);
    for (const auto& partition : partitions) {
      for (Side b_side : {Side::kLeft, Side::kRight}) {
        const int side_masks = 1 << (n - 1);
        for (int mask = 0; mask < side_masks; ++mask) {
          Configuration config;
          config.connectivity = n;
          config.b_rank = b_rank;
          config.b_side = b_side;
          for (int slot = 0; slot < n - 1; ++slot) {
            const std::vector<int>& triple = partition[slot];  // ascending
            config.holes.push_back(HoleSpec{triple[2], triple[1], triple[0],
                                            (mask >> slot) & 1 ? Side::kRight : Side::kLeft,
                                            slot});
          }
          out.push_back(std::move(config));
        }
      }
    }
  }
  return out;
}

std::vector<VertexKind> expected_kinds(const Configuration& config) {
  const int n = config.connectivity;
  std::vector<VertexKind> kinds(3 * n, VertexKind::kSource);
  kinds[0] = VertexKind::kSource;
  kinds[3 * n - 1] = VertexKind::kSink;
  kinds[config.b_rank] = config.b_side == Side::kRight ? VertexKind::kRegularRight
                                                       : VertexKind::kRegularLeft;
  for (const HoleSpec& hole : config.holes) {
    kinds[hole.rank_top] = VertexKind::kMerge;
    kinds[hole.rank_bottom] = VertexKind::kSplit;
    // The channel past the middle vertex lies opposite the hole body, so a
    // right-side middle vertex is a left-marked regular vertex.
    kinds[hole.rank_mid] = hole.side == Side::kRight ? VertexKind::kRegularLeft
                                                     : VertexKind::kRegularRight;
  }
  return kinds;
}

PolygonWithHoles realize(const Configuration& config) {
  check_configuration(config);
  PolygonWithHoles poly = [&] {
    try {
      if (config.b_side == Side::kRight) return realize_b_right(config);
      return reflect_x(realize_b_right(mirrored(config)));
    } catch (const ValidationError& err) {
      throw RealizationFailed("realize: validation failed for {" + to_string(config) +
                              "}: " + err.what());
    }
  }();

  // Heights equal ranks by construction; verify the classification lands
  // on the intended kinds.
  const std::vector<VertexKind> intended = expected_kinds(config);
  for (int r = 0; r < poly.ring_count(); ++r) {
    for (int v = 0; v < static_cast<int>(poly.ring(r).size()); ++v) {
      const Point& p = poly.ring(r)[v];
      if (denominator(p.y) != 1) {
        throw RealizationFailed("realize: non-integer height for {" + to_string(config) + "}");
      }
      const int rank = static_cast<int>(numerator(p.y));
      if (rank < 0 || rank >= 3 * config.connectivity) {
        throw RealizationFailed("realize: height out of range for {" + to_string(config) + "}");
      }
      if (classify_vertex(poly, r, v) != intended[rank]) {
        throw RealizationFailed("realize: vertex at rank " + std::to_string(rank) +
                                " classifies differently than intended for {" +
                                to_string(config) + "}");
      }
    }
  }
  return poly;
}

ClassReport enumerate_classes(int connectivity, const EquivalenceSettings& settings,
                              int workers) {
  const std::vector<Configuration> configs = generate_configs(connectivity);
  workers = std::max(1, std::min<int>(workers, static_cast<int>(configs.size())));

  using LocalMap = std::map<std::string, std::size_t>;  // certificate -> min index
  std::vector<LocalMap> locals(workers);
  std::vector<std::exception_ptr> failures(workers);

  auto scan = [&](int worker) {
    try {
      LocalMap& local = locals[worker];
      for (std::size_t i = worker; i < configs.size(); i += workers) {
        const PolygonWithHoles poly = realize(configs[i]);
        const BuildResult result = build(poly);
        if (!is_optimal(result.graph, connectivity)) {
          throw OptimalityViolation("enumerate: non-optimal graph from {" +
                                    to_string(configs[i]) + "}");
        }
        const std::string cert = class_certificate(result.graph, settings);
        auto [it, inserted] = local.try_emplace(cert, i);
        if (!inserted && i < it->second) it->second = i;
      }
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  LocalMap merged;
  for (const LocalMap& local : locals) {
    for (const auto& [cert, index] : local) {
      auto [it, inserted] = merged.try_emplace(cert, index);
      if (!inserted && index < it->second) it->second = index;
    }
  }

  ClassReport report;
  report.connectivity = connectivity;
  report.settings = settings;
  report.configuration_count = configs.size();
  for (const auto& [cert, index] : merged) {
    report.classes.push_back(ClassEntry{cert, configs[index], index});
  }
  return report;
}

namespace {

bool spans_overlap(const Configuration& config) {
  const HoleSpec& a = config.holes.at(0);
  const HoleSpec& b = config.holes.at(1);
  const HoleSpec& upper = a.rank_top > b.rank_top ? a : b;
  const HoleSpec& lower = a.rank_top > b.rank_top ? b : a;
  return lower.rank_top > upper.rank_bottom;
}

std::string arrangement_signature(const Configuration& config) {
  const HoleSpec& a = config.holes.at(0);
  const HoleSpec& b = config.holes.at(1);
  const HoleSpec& upper = a.rank_top > b.rank_top ? a : b;
  const HoleSpec& lower = a.rank_top > b.rank_top ? b : a;

  std::string pattern;
  for (int rank = 3 * config.connectivity - 2; rank >= 1; --rank) {
    if (rank == upper.rank_top || rank == upper.rank_mid || rank == upper.rank_bottom) {
      pattern += 'U';
    } else if (rank == lower.rank_top || rank == lower.rank_mid || rank == lower.rank_bottom) {
      pattern += 'L';
    }
  }
  return "pattern=" + pattern + " upper_side=" + side_name(upper.side) +
         " lower_side=" + side_name(lower.side) +
         " slots=" + (upper.slot < lower.slot ? "UL" : "LU") +
         " b_side=" + side_name(config.b_side);
}

}  // namespace

ArrangementReport arrangement_report(const EquivalenceSettings& settings) {
  const std::vector<Configuration> configs = generate_configs(3);

  struct ClassInfo {
    std::size_t min_index;
    bool seen_disjoint = false;
    bool seen_overlap = false;
  };
  std::map<std::string, ClassInfo> classes;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const BuildResult result = build(realize(configs[i]));
    if (!is_optimal(result.graph, 3)) {
      throw OptimalityViolation("arrangement_report: non-optimal graph from {" +
                                to_string(configs[i]) + "}");
    }
    const std::string cert = class_certificate(result.graph, settings);
    auto [it, inserted] = classes.try_emplace(cert, ClassInfo{i});
    if (!inserted && i < it->second.min_index) it->second.min_index = i;
    (spans_overlap(configs[i]) ? it->second.seen_overlap : it->second.seen_disjoint) = true;
  }

  ArrangementReport report;
  std::map<std::string, int> rows;
  for (const auto& [cert, info] : classes) {
    const Configuration& rep = configs[info.min_index];
    ++rows[arrangement_signature(rep)];
    if (spans_overlap(rep)) {
      ++report.overlapping_span_classes;
    } else {
      ++report.disjoint_span_classes;
    }
    if (info.seen_disjoint && info.seen_overlap) ++report.mixed_regime_classes;
  }
  for (const auto& [signature, count] : rows) {
    report.rows.push_back(ArrangementRow{signature, count});
  }
  report.total_classes = static_cast<int>(classes.size());
  return report;
}

namespace {

std::vector<ReebGraph> expand(const ReebGraph& g) {
  std::vector<ReebGraph> out;
  for (const auto& edge : g.edges()) {
    for (int slot = edge.first + 1; slot <= edge.second; ++slot) {
      out.push_back(subdivide(g, edge, Side::kLeft, slot));
      out.push_back(subdivide(g, edge, Side::kRight, slot));
    }
  }
  for (int rank = 0; rank < g.vertex_count(); ++rank) {
    const VertexKind kind = g.kinds()[rank];
    if (kind != VertexKind::kRegularLeft && kind != VertexKind::kRegularRight) continue;
    for (int slot = 0; slot <= rank; ++slot) {
      out.push_back(attach_leaf(g, rank, VertexKind::kSource, slot));
    }
    for (int slot = rank + 1; slot <= g.vertex_count(); ++slot) {
      out.push_back(attach_leaf(g, rank, VertexKind::kSink, slot));
    }
  }
  return out;
}

std::size_t closure_level_counts(int max_vertices, const EquivalenceSettings& settings,
                                 std::vector<std::size_t>& counts) {
  // One representative per class per level; dedup keys are certificates.
  std::vector<ReebGraph> level;
  for (Side mark : {Side::kLeft, Side::kRight}) {
    level.push_back(ReebGraph({VertexKind::kSource,
                               mark == Side::kLeft ? VertexKind::kRegularLeft
                                                   : VertexKind::kRegularRight,
                               VertexKind::kSink},
                              {{0, 1}, {1, 2}}));
  }
  std::size_t total = 0;
  for (int size = 3; size <= max_vertices; ++size) {
    std::map<std::string, ReebGraph> dedup;
    for (const ReebGraph& g : level) {
      dedup.try_emplace(class_certificate(g, settings), g);
    }
    counts.push_back(dedup.size());
    total += dedup.size();
    if (size == max_vertices) break;
    std::vector<ReebGraph> next;
    for (const auto& [cert, g] : dedup) {
      for (ReebGraph& candidate : expand(g)) next.push_back(std::move(candidate));
    }
    level = std::move(next);
  }
  return total;
}

}  // namespace

ClosureReport closure_simple(int max_vertices) {
  if (max_vertices < 3) {
    throw std::invalid_argument("closure_simple: max_vertices must be at least 3");
  }
  EquivalenceSettings unordered;
  EquivalenceSettings ordered;
  ordered.ordered = true;

  std::vector<std::size_t> unordered_counts;
  std::vector<std::size_t> ordered_counts;
  closure_level_counts(max_vertices, unordered, unordered_counts);
  closure_level_counts(max_vertices, ordered, ordered_counts);

  ClosureReport report;
  report.max_vertices = max_vertices;
  for (int size = 3; size <= max_vertices; ++size) {
    report.sizes.push_back(ClosureSizeCount{size, unordered_counts[size - 3],
                                            ordered_counts[size - 3]});
  }
  return report;
}

}  // namespace reebtrap
