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

#include "dpst/privatizer.h"

#include <random>
#include <string>

#include "dpst/error.h"
#include "dpst/text.h"

namespace dpst {

Privatizer::Privatizer(const Corpus& corpus, const ClusterIndex& index,
                       const EmbeddingProvider& provider,
                       const ExtractorProvider& extractor,
                       const TripleScorer& scorer, PrivatizerOptions options)
    : corpus_(corpus),
      index_(index),
      provider_(provider),
      extractor_(extractor),
      scorer_(scorer),
      options_(options) {
  if (corpus_.size() == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "privatizer needs a public corpus");
  }
  if (index_.corpus_size() != corpus_.size() ||
      index_.dimension != corpus_.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cluster index was not built over this corpus");
  }
  if (provider_.dimension() != corpus_.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding provider dimension " +
                    std::to_string(provider_.dimension()) +
                    " differs from corpus dimension " +
                    std::to_string(corpus_.dimension()));
  }
  members_.resize(index_.k);
  for (std::size_t i = 0; i < index_.assignments.size(); ++i) {
    members_[index_.assignments[i]].push_back(static_cast<std::uint32_t>(i));
  }
}

std::vector<double> Privatizer::NeighborhoodDistribution(
    std::span<const float> embedding, std::uint32_t cluster,
    double epsilon) const {
  const auto& ids = members_.at(cluster);
  if (ids.empty()) {
    throw Error(ErrorCode::kEmptyNeighborhood,
                "cluster " + std::to_string(cluster) + " has no members");
  }
  std::vector<double> utilities;
  utilities.reserve(ids.size());
  for (std::uint32_t id : ids) {
    utilities.push_back(ClampedUtility(embedding, corpus_.vector(id)));
  }
  return EmProbabilities(utilities, epsilon);
}

std::uint32_t Privatizer::PrivatizeTriple(std::span<const float> embedding,
                                          double epsilon, Rng& rng,
                                          std::uint32_t* neighborhood) const {
  const std::uint32_t cluster = NearestCentroid(embedding, index_);
  const std::vector<double> p =
      NeighborhoodDistribution(embedding, cluster, epsilon);
  if (neighborhood != nullptr) *neighborhood = cluster;
  return members_[cluster][EmSample(p, rng)];
}

PrivatizationRecord Privatizer::Privatize(std::string_view doc_id,
                                          std::string_view text,
                                          const BudgetPolicy& budget,
                                          const MechanismConfig& config) const {
  PrivatizationRecord record;
  record.doc_id = std::string(doc_id);

  const std::vector<SemanticTriple> extracted =
      ExtractTriples(doc_id, text, extractor_);
  record.inputs = DedupTriples(extracted, scorer_, options_.dedup_threshold,
                               options_.dedup_seed);

  const double words = static_cast<double>(CountWords(text));
  if (record.inputs.empty()) {
    record.fallback = true;
    record.passthrough_text = std::string(text);
    record.budget.base_epsilon = budget.base_epsilon;
    const double budget_words =
        budget.source == BudgetPolicy::WordSource::kDatasetAverage
            ? budget.avg_words
            : words;
    if (budget_words >= 1.0) {
      record.budget.document_epsilon =
          DocumentBudget(budget.base_epsilon, budget_words);
    }
    return record;
  }

  record.budget = AllocateBudget(budget, words, record.inputs.size());

  std::vector<std::string> keys;
  keys.reserve(record.inputs.size());
  for (const auto& t : record.inputs) keys.push_back(FormatTriple(t));
  const std::vector<EmbeddingVector> embedded = EmbedBatch(keys, provider_);

  std::uint64_t seed = 0;
  if (config.rng_seed) {
    seed = *config.rng_seed;
  } else {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  Rng rng(seed);
  for (const auto& v : embedded) {
    std::uint32_t cluster = 0;
    const std::uint32_t chosen = PrivatizeTriple(
        v.span(), record.budget.per_triple_epsilon, rng, &cluster);
    record.neighborhoods.push_back(cluster);
    PublicTriple out;
    out.id = chosen;
    out.triple = corpus_.triple(chosen);
    out.cluster_ids[index_.k] = cluster;
    record.outputs.push_back(std::move(out));
  }
  return record;
}

PrivatizationRecord PrivatizeDocument(
    std::string_view doc_id, std::string_view text, const Corpus& corpus,
    const ClusterIndex& index, const EmbeddingProvider& provider,
    const ExtractorProvider& extractor, const TripleScorer& scorer,
    const BudgetPolicy& budget, const MechanismConfig& config,
    const PrivatizerOptions& options) {
  const Privatizer privatizer(corpus, index, provider, extractor, scorer,
                              options);
  return privatizer.Privatize(doc_id, text, budget, config);
}

}  // namespace dpst
