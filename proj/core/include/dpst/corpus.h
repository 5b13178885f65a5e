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

#ifndef DPST_CORPUS_H_
#define DPST_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dpst/embedding.h"
#include "dpst/kmeans.h"
#include "dpst/minhash.h"
#include "dpst/scorer.h"
#include "dpst/triples.h"
#include "dpst/vector_file.h"

namespace dpst {

// Element of the public corpus. `cluster_ids` maps a k to this triple's
// cluster under the index built with that k.
struct PublicTriple {
  std::uint32_t id = 0;
  SemanticTriple triple;
  EmbeddingVector vector;
  std::map<std::uint32_t, std::uint32_t> cluster_ids;
};

struct IngestOptions {
  double dedup_threshold = kDefaultDedupThreshold;
  std::uint64_t dedup_seed = 0;
  // Texts per provider call.
  std::size_t batch_size = 256;
};

// Deduplicated public triples and their unit embeddings. Row i of
// `vectors()` embeds `triple(i)`; ids are row positions.
class Corpus {
 public:
  Corpus() = default;

  // Takes ownership of rows that are already deduplicated and embedded.
  // Throws EmptyCorpus when empty, DimensionMismatch when counts disagree.
  Corpus(std::vector<SemanticTriple> triples, VectorMatrix vectors,
         std::size_t raw_count);

  std::size_t size() const { return triples_.size(); }
  std::size_t raw_count() const { return raw_count_; }
  std::uint32_t dimension() const { return vectors_.dimension; }

  const SemanticTriple& triple(std::size_t id) const { return triples_.at(id); }
  std::span<const float> vector(std::size_t id) const {
    return vectors_.row(id);
  }
  const std::vector<SemanticTriple>& triples() const { return triples_; }
  const VectorMatrix& vectors() const { return vectors_; }

  PublicTriple Row(std::size_t id) const;

 private:
  std::vector<SemanticTriple> triples_;
  VectorMatrix vectors_;
  std::size_t raw_count_ = 0;
};

// Dedups `triples` (MinHash LSH + scorer), embeds the survivors, and stores
// them in first-appearance order. Throws EmptyCorpus when nothing survives;
// provider errors propagate.
Corpus IngestTriples(std::span<const SemanticTriple> triples,
                     const EmbeddingProvider& provider,
                     const TripleScorer& scorer,
                     const IngestOptions& options = {});

// Members of cluster c in ascending id order, each tagged with c under
// index.k. Throws UnknownCluster.
std::vector<PublicTriple> ClusterMembers(const Corpus& corpus,
                                         const ClusterIndex& index,
                                         std::size_t c);

}  // namespace dpst

#endif  // DPST_CORPUS_H_
