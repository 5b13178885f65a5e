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

#include "dpst/corpus.h"

#include <string>
#include <utility>

#include "dpst/error.h"

namespace dpst {

Corpus::Corpus(std::vector<SemanticTriple> triples, VectorMatrix vectors,
               std::size_t raw_count)
    : triples_(std::move(triples)),
      vectors_(std::move(vectors)),
      raw_count_(raw_count) {
  if (triples_.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus has no triples");
  }
  if (vectors_.rows() != triples_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(vectors_.rows()) + " vectors for " +
                    std::to_string(triples_.size()) + " triples");
  }
}

PublicTriple Corpus::Row(std::size_t id) const {
  PublicTriple row;
  row.id = static_cast<std::uint32_t>(id);
  row.triple = triple(id);
  const auto v = vector(id);
  row.vector.values.assign(v.begin(), v.end());
  return row;
}

Corpus IngestTriples(std::span<const SemanticTriple> triples,
                     const EmbeddingProvider& provider,
                     const TripleScorer& scorer,
                     const IngestOptions& options) {
  std::vector<SemanticTriple> kept = DedupTriples(
      triples, scorer, options.dedup_threshold, options.dedup_seed);
  if (kept.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no triples survived deduplication");
  }

  VectorMatrix vectors;
  vectors.dimension = static_cast<std::uint32_t>(provider.dimension());
  vectors.values.reserve(kept.size() * vectors.dimension);
  const std::size_t batch = options.batch_size == 0 ? 1 : options.batch_size;
  std::vector<std::string> keys;
  for (std::size_t start = 0; start < kept.size(); start += batch) {
    keys.clear();
    for (std::size_t i = start; i < std::min(kept.size(), start + batch); ++i) {
      keys.push_back(FormatTriple(kept[i]));
    }
    for (const auto& v : EmbedBatch(keys, provider)) {
      vectors.values.insert(vectors.values.end(), v.values.begin(),
                            v.values.end());
    }
  }
  return Corpus(std::move(kept), std::move(vectors), triples.size());
}

std::vector<PublicTriple> ClusterMembers(const Corpus& corpus,
                                         const ClusterIndex& index,
                                         std::size_t c) {
  if (index.corpus_size() != corpus.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cluster index covers " + std::to_string(index.corpus_size()) +
                    " rows, corpus has " + std::to_string(corpus.size()));
  }
  std::vector<PublicTriple> out;
  for (std::uint32_t id : ClusterMemberIds(index, c)) {
    PublicTriple row = corpus.Row(id);
    row.cluster_ids[index.k] = static_cast<std::uint32_t>(c);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace dpst
