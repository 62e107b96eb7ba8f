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

#include <benchmark/benchmark.h>

#include "reebtrap/enumerate.hpp"
#include "reebtrap/io.hpp"

namespace {

using namespace reebtrap;

Point pt(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

PolygonWithHoles fixture() {
  return validate({pt(0, 0), pt(12, 4), pt(2, 9)}, {{pt(5, 3), pt(6, 5), pt(5, 7)}});
}

Configuration nine_vertex_config() {
  Configuration config;
  config.connectivity = 3;
  config.b_rank = 4;
  config.b_side = Side::kRight;
  config.holes = {HoleSpec{7, 5, 2, Side::kRight, 0}, HoleSpec{6, 3, 1, Side::kLeft, 1}};
  return config;
}

void BM_Validate(benchmark::State& state) {
  const Ring outer{pt(0, 0), pt(12, 4), pt(2, 9)};
  const std::vector<Ring> holes{{pt(5, 3), pt(6, 5), pt(5, 7)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(outer, holes));
  }
}
BENCHMARK(BM_Validate);

void BM_Build(benchmark::State& state) {
  const PolygonWithHoles poly = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build(poly));
  }
}
BENCHMARK(BM_Build);

void BM_BuildNineVertices(benchmark::State& state) {
  const PolygonWithHoles poly = realize(nine_vertex_config());
  for (auto _ : state) {
    benchmark::DoNotOptimize(build(poly));
  }
}
BENCHMARK(BM_BuildNineVertices);

void BM_ClassCertificateUnordered(benchmark::State& state) {
  const ReebGraph g = build(realize(nine_vertex_config())).graph;
  const EquivalenceSettings settings;
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_certificate(g, settings));
  }
}
BENCHMARK(BM_ClassCertificateUnordered);

void BM_EnumerateTwoConnected(benchmark::State& state) {
  const EquivalenceSettings settings;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_classes(2, settings));
  }
}
BENCHMARK(BM_EnumerateTwoConnected);

void BM_EnumerateThreeConnected(benchmark::State& state) {
  const EquivalenceSettings settings;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_classes(3, settings));
  }
}
BENCHMARK(BM_EnumerateThreeConnected);

void BM_WriteSvg(benchmark::State& state) {
  const PolygonWithHoles poly = fixture();
  const BuildResult result = build(poly);
  for (auto _ : state) {
    benchmark::DoNotOptimize(io::write_svg(poly, result));
  }
}
BENCHMARK(BM_WriteSvg);

}  // namespace

BENCHMARK_MAIN();
