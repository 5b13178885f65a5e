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

#ifndef DPST_PRIVATIZER_H_
#define DPST_PRIVATIZER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dpst/budget.h"
#include "dpst/corpus.h"
#include "dpst/embedding.h"
#include "dpst/extractor.h"
#include "dpst/kmeans.h"
#include "dpst/mechanism.h"
#include "dpst/minhash.h"
#include "dpst/scorer.h"

namespace dpst {

// Per-document trace of the privatization. When `fallback` is set the
// document had no triples, `outputs` is empty and `passthrough_text` holds
// the original text.
struct PrivatizationRecord {
  std::string doc_id;
  std::vector<SemanticTriple> inputs;
  std::vector<std::uint32_t> neighborhoods;
  // id and triple of each selected public triple (vectors are not kept).
  std::vector<PublicTriple> outputs;
  bool fallback = false;
  PrivacyBudget budget;
  std::string passthrough_text;
};

struct PrivatizerOptions {
  // Must match the settings the corpus was deduplicated with.
  double dedup_threshold = kDefaultDedupThreshold;
  std::uint64_t dedup_seed = 0;
};

// Replaces each extracted triple by an exponential-mechanism draw from the
// cluster whose centroid is nearest to it. Holds references only; all
// referenced objects must outlive it. Privatize is const and thread-safe.
class Privatizer {
 public:
  Privatizer(const Corpus& corpus, const ClusterIndex& index,
             const EmbeddingProvider& provider,
             const ExtractorProvider& extractor, const TripleScorer& scorer,
             PrivatizerOptions options = {});

  // Pipeline: extract, dedup, then per triple embed, pick the nearest
  // centroid, score every cluster member with the clamped cosine utility,
  // and sample at the per-triple budget. Zero triples gives a fallback
  // record. Provider errors propagate.
  PrivatizationRecord Privatize(std::string_view doc_id, std::string_view text,
                                const BudgetPolicy& budget,
                                const MechanismConfig& config) const;

  // Mechanism for a single already-embedded triple: returns the selected
  // corpus row and writes the neighborhood it was drawn from.
  std::uint32_t PrivatizeTriple(std::span<const float> embedding,
                                double epsilon, Rng& rng,
                                std::uint32_t* neighborhood) const;

  // Exact output distribution over the members of `cluster` for an input
  // with this embedding (members in ascending id order).
  std::vector<double> NeighborhoodDistribution(std::span<const float> embedding,
                                               std::uint32_t cluster,
                                               double epsilon) const;

  const std::vector<std::uint32_t>& members(std::uint32_t cluster) const {
    return members_.at(cluster);
  }

 private:
  const Corpus& corpus_;
  const ClusterIndex& index_;
  const EmbeddingProvider& provider_;
  const ExtractorProvider& extractor_;
  const TripleScorer& scorer_;
  PrivatizerOptions options_;
  std::vector<std::vector<std::uint32_t>> members_;
};

// One-shot form of Privatizer::Privatize.
PrivatizationRecord PrivatizeDocument(
    std::string_view doc_id, std::string_view text, const Corpus& corpus,
    const ClusterIndex& index, const EmbeddingProvider& provider,
    const ExtractorProvider& extractor, const TripleScorer& scorer,
    const BudgetPolicy& budget, const MechanismConfig& config,
    const PrivatizerOptions& options = {});

}  // namespace dpst

#endif  // DPST_PRIVATIZER_H_
