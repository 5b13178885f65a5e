// Copyright 2026 The dpst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "dpst/embedding.h"
#include "dpst/kmeans.h"
#include "dpst/mechanism.h"
#include "dpst/minhash.h"
#include "dpst/random.h"
#include "dpst/scorer.h"
#include "dpst/triples.h"

namespace dpst {
namespace {

std::vector<double> RandomUtilities(std::size_t n) {
  std::mt19937_64 gen(n);
  std::uniform_real_distribution<double> unit(0, 1);
  std::vector<double> u(n);
  for (double& x : u) x = unit(gen);
  return u;
}

VectorMatrix RandomUnitVectors(std::size_t n, std::size_t dim) {
  std::mt19937_64 gen(n * 31 + dim);
  std::normal_distribution<float> normal;
  VectorMatrix m;
  m.dimension = dim;
  m.values.resize(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    float norm = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      const float v = normal(gen);
      m.values[i * dim + d] = v;
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (std::size_t d = 0; d < dim; ++d) m.values[i * dim + d] /= norm;
  }
  return m;
}

void BM_EmProbabilities(benchmark::State& state) {
  const auto u = RandomUtilities(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(EmProbabilities(u, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmProbabilities)->RangeMultiplier(10)->Range(10, 100000);

void BM_EmSample(benchmark::State& state) {
  const auto p =
      EmProbabilities(RandomUtilities(static_cast<std::size_t>(state.range(0))), 1.0);
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(EmSample(p, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmSample)->RangeMultiplier(10)->Range(10, 100000);

void BM_KMeans(benchmark::State& state) {
  const auto m = RandomUnitVectors(static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(KMeansCluster(m, static_cast<std::size_t>(state.range(1)), 1));
  }
}
BENCHMARK(BM_KMeans)->Args({2000, 20})->Args({10000, 50})->Unit(benchmark::kMillisecond);

void BM_NearestCentroid(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  const auto m = RandomUnitVectors(k * 10, 384);
  const ClusterIndex index = KMeansCluster(m, k, 1).index;
  const auto q = RandomUnitVectors(1, 384);
  for (auto _ : state) benchmark::DoNotOptimize(NearestCentroid(q.values, index));
}
BENCHMARK(BM_NearestCentroid)->Arg(20)->Arg(100)->Arg(500);

void BM_MinHash(benchmark::State& state) {
  const std::string text = "The quick brown fox | jumped over | the lazy dog";
  for (auto _ : state) benchmark::DoNotOptimize(ComputeMinHash(text, 3));
}
BENCHMARK(BM_MinHash);

void BM_Dedup(benchmark::State& state) {
  std::vector<SemanticTriple> triples;
  for (int i = 0; i < state.range(0); ++i) {
    triples.push_back({"person " + std::to_string(i % 97), "visited",
                       "place " + std::to_string(i)});
  }
  const UnigramSurprisalScorer scorer = UnigramSurprisalScorer::FromTriples(triples);
  for (auto _ : state) {
    benchmark::DoNotOptimize(DedupTriples(triples, scorer, 0.4, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Dedup)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dpst

BENCHMARK_MAIN();
