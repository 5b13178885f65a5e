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

#include "dpst/corpus_store.h"

#include <string>
#include <utility>

#include "dpst/error.h"
#include "dpst/vector_file.h"
#include "json_util.h"

namespace dpst {
namespace {

using internal::Json;

std::filesystem::path Sub(const std::filesystem::path& dir,
                          std::string_view name) {
  return dir / std::string(name);
}

Json MetaToJson(const CorpusMeta& meta) {
  Json clusters = Json::object();
  for (const auto& [k, seed] : meta.cluster_seeds) {
    clusters[std::to_string(k)] = Json{{"seed", seed}};
  }
  return Json{
      {"format", {{"vectors", "DPSTVEC1"}, {"clusters", "DPSTCLU1"}}},
      {"dimension", meta.dimension},
      {"embedding",
       {{"mode", meta.embedding.mode},
        {"seed", meta.embedding.seed},
        {"endpoint", meta.embedding.endpoint}}},
      {"dedup", {{"seed", meta.dedup_seed}, {"threshold", meta.dedup_threshold}}},
      {"counts", {{"raw", meta.raw_count}, {"stored", meta.stored_count}}},
      {"clusters", clusters},
  };
}

CorpusMeta MetaFromJson(const Json& j) {
  CorpusMeta meta;
  meta.dimension = j.at("dimension").get<std::uint32_t>();
  const Json& emb = j.at("embedding");
  meta.embedding.mode = emb.at("mode").get<std::string>();
  meta.embedding.seed = emb.at("seed").get<std::uint64_t>();
  meta.embedding.endpoint = emb.value("endpoint", std::string());
  meta.dedup_seed = j.at("dedup").at("seed").get<std::uint64_t>();
  meta.dedup_threshold = j.at("dedup").at("threshold").get<double>();
  meta.raw_count = j.at("counts").at("raw").get<std::uint64_t>();
  meta.stored_count = j.at("counts").at("stored").get<std::uint64_t>();
  for (const auto& [key, value] : j.at("clusters").items()) {
    meta.cluster_seeds[static_cast<std::uint32_t>(std::stoul(key))] =
        value.at("seed").get<std::uint64_t>();
  }
  return meta;
}

}  // namespace

std::filesystem::path ClusterFilePath(const std::filesystem::path& dir,
                                      std::uint32_t k) {
  return dir / ("clusters.k" + std::to_string(k) + ".bin");
}

CorpusMeta ReadCorpusMeta(const std::filesystem::path& dir) {
  const std::string text = internal::ReadWholeFile(Sub(dir, kMetaFileName));
  try {
    return MetaFromJson(Json::parse(text));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFormatError,
                (dir / std::string(kMetaFileName)).string() + ": " + e.what());
  }
}

void WriteCorpusMeta(const std::filesystem::path& dir, const CorpusMeta& meta) {
  internal::WriteWholeFile(Sub(dir, kMetaFileName),
                           MetaToJson(meta).dump(2) + "\n");
}

void SaveCorpus(const std::filesystem::path& dir, const Corpus& corpus,
                CorpusMeta meta) {
  std::filesystem::create_directories(dir);
  std::string lines;
  std::vector<std::string> keys;
  keys.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Json row = internal::TripleToJson(corpus.triple(i));
    row["id"] = i;
    lines += row.dump();
    lines.push_back('\n');
    keys.push_back(FormatTriple(corpus.triple(i)));
  }
  internal::WriteWholeFile(Sub(dir, kTriplesFileName), lines);
  WriteVectorFile(Sub(dir, kVectorsFileName), corpus.vectors());
  WriteKeyFile(Sub(dir, kKeysFileName), keys);

  meta.dimension = corpus.dimension();
  meta.raw_count = corpus.raw_count();
  meta.stored_count = corpus.size();
  WriteCorpusMeta(dir, meta);
}

StoredCorpus LoadCorpus(const std::filesystem::path& dir) {
  CorpusMeta meta = ReadCorpusMeta(dir);
  std::vector<SemanticTriple> triples;
  internal::ForEachJsonLine(Sub(dir, kTriplesFileName), [&](const Json& j) {
    const auto id = j.at("id").get<std::size_t>();
    if (id != triples.size()) {
      throw Error(ErrorCode::kFormatError,
                  "triples.jsonl ids must be 0..n-1 in order; saw " +
                      std::to_string(id));
    }
    triples.push_back(internal::TripleFromJson(j));
  });
  VectorMatrix vectors = ReadVectorFile(Sub(dir, kVectorsFileName));
  if (vectors.dimension != meta.dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vectors.bin dimension disagrees with meta.json");
  }
  Corpus corpus(std::move(triples), std::move(vectors), meta.raw_count);
  return StoredCorpus{std::move(corpus), std::move(meta)};
}

void WriteClusterFile(const std::filesystem::path& path,
                      const ClusterIndex& index) {
  if (index.centroids.size() !=
      static_cast<std::size_t>(index.k) * index.dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                "centroid buffer does not hold k x dimension values");
  }
  std::string bytes(kClusterFileMagic);
  internal::AppendU32(bytes, index.k);
  internal::AppendU32(bytes, index.dimension);
  internal::AppendU64(bytes, index.assignments.size());
  for (float v : index.centroids) internal::AppendF32(bytes, v);
  for (std::uint32_t a : index.assignments) internal::AppendU32(bytes, a);
  internal::WriteWholeFile(path, bytes);
}

ClusterIndex ReadClusterFile(const std::filesystem::path& path) {
  const std::string bytes = internal::ReadWholeFile(path);
  constexpr std::size_t kHeader = 8 + 4 + 4 + 8;
  if (bytes.size() < kHeader ||
      std::string_view(bytes).substr(0, 8) != kClusterFileMagic) {
    throw Error(ErrorCode::kFormatError,
                path.string() + " is not a DPSTCLU1 file");
  }
  ClusterIndex index;
  index.k = internal::ReadU32(bytes, 8);
  index.dimension = internal::ReadU32(bytes, 12);
  const std::uint64_t count = internal::ReadU64(bytes, 16);
  const std::uint64_t n_centroid = std::uint64_t{index.k} * index.dimension;
  if (bytes.size() != kHeader + 4 * n_centroid + 4 * count) {
    throw Error(ErrorCode::kFormatError,
                path.string() + ": payload size disagrees with header");
  }
  index.centroids.resize(n_centroid);
  std::size_t off = kHeader;
  for (auto& v : index.centroids) {
    v = internal::ReadF32(bytes, off);
    off += 4;
  }
  index.assignments.resize(count);
  for (auto& a : index.assignments) {
    a = internal::ReadU32(bytes, off);
    off += 4;
    if (a >= index.k) {
      throw Error(ErrorCode::kFormatError,
                  path.string() + ": assignment outside [0, k)");
    }
  }
  return index;
}

void SaveClusterIndex(const std::filesystem::path& dir,
                      const ClusterIndex& index) {
  CorpusMeta meta = ReadCorpusMeta(dir);
  if (index.corpus_size() != meta.stored_count) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cluster index does not cover the stored corpus");
  }
  WriteClusterFile(ClusterFilePath(dir, index.k), index);
  meta.cluster_seeds[index.k] = index.seed;
  WriteCorpusMeta(dir, meta);
}

ClusterIndex LoadClusterIndex(const std::filesystem::path& dir,
                              std::uint32_t k) {
  const CorpusMeta meta = ReadCorpusMeta(dir);
  const auto it = meta.cluster_seeds.find(k);
  if (it == meta.cluster_seeds.end()) {
    throw Error(ErrorCode::kInvalidK, "no clusters built for k=" +
                                          std::to_string(k) + " in " +
                                          dir.string());
  }
  ClusterIndex index = ReadClusterFile(ClusterFilePath(dir, k));
  if (index.k != k || index.corpus_size() != meta.stored_count) {
    throw Error(ErrorCode::kFormatError,
                ClusterFilePath(dir, k).string() +
                    " does not match the corpus metadata");
  }
  index.seed = it->second;
  return index;
}

}  // namespace dpst
