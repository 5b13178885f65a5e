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

#ifndef DPST_CORPUS_STORE_H_
#define DPST_CORPUS_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "dpst/corpus.h"
#include "dpst/kmeans.h"

namespace dpst {

// On-disk corpus directory:
//   triples.jsonl       {"id": i, "s": ..., "p": ..., "o": ...} per row
//   vectors.bin         DPSTVEC1 rows aligned with triples.jsonl
//   vectors.keys        formatted triple string per row
//   clusters.k<k>.bin   DPSTCLU1 cluster index, one file per k
//   meta.json           dimension, seeds, counts, built cluster sets
//
// DPSTCLU1 layout, little-endian: magic "DPSTCLU1", u32 k, u32 dimension,
// u64 corpus count, k*dimension f32 centroids (row-major), count u32
// assignments.
inline constexpr std::string_view kClusterFileMagic = "DPSTCLU1";

inline constexpr std::string_view kTriplesFileName = "triples.jsonl";
inline constexpr std::string_view kVectorsFileName = "vectors.bin";
inline constexpr std::string_view kKeysFileName = "vectors.keys";
inline constexpr std::string_view kMetaFileName = "meta.json";

struct EmbeddingSpec {
  // "stub", "precomputed" or "http".
  std::string mode = "stub";
  std::uint64_t seed = 0;
  std::string endpoint;
};

struct CorpusMeta {
  std::uint32_t dimension = 0;
  EmbeddingSpec embedding;
  std::uint64_t dedup_seed = 0;
  double dedup_threshold = 0.4;
  std::uint64_t raw_count = 0;
  std::uint64_t stored_count = 0;
  // k -> seed used to build clusters.k<k>.bin.
  std::map<std::uint32_t, std::uint64_t> cluster_seeds;

  friend bool operator==(const CorpusMeta&, const CorpusMeta&) = default;
};

struct StoredCorpus {
  Corpus corpus;
  CorpusMeta meta;
};

std::filesystem::path ClusterFilePath(const std::filesystem::path& dir,
                                      std::uint32_t k);

// Writes triples, vectors, keys and meta.json. Creates `dir` if needed.
// `meta.dimension` and the counts are taken from `corpus`.
void SaveCorpus(const std::filesystem::path& dir, const Corpus& corpus,
                CorpusMeta meta);
StoredCorpus LoadCorpus(const std::filesystem::path& dir);

void WriteClusterFile(const std::filesystem::path& path,
                      const ClusterIndex& index);
// The returned index has seed 0; the seed lives in meta.json.
ClusterIndex ReadClusterFile(const std::filesystem::path& path);

// Writes clusters.k<k>.bin and records its seed in meta.json.
void SaveClusterIndex(const std::filesystem::path& dir,
                      const ClusterIndex& index);
// Throws InvalidK if no index with this k was built for the corpus.
ClusterIndex LoadClusterIndex(const std::filesystem::path& dir,
                              std::uint32_t k);

CorpusMeta ReadCorpusMeta(const std::filesystem::path& dir);
void WriteCorpusMeta(const std::filesystem::path& dir, const CorpusMeta& meta);

}  // namespace dpst

#endif  // DPST_CORPUS_STORE_H_
