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

#ifndef DPST_SCORER_H_
#define DPST_SCORER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <unordered_map>

#include "dpst/triples.h"

namespace dpst {

// Fluency score for a triple; lower is more fluent. Must be deterministic
// and non-negative.
class TripleScorer {
 public:
  virtual ~TripleScorer() = default;
  virtual double Score(const SemanticTriple& triple) const = 0;
};

// Mean per-token surprisal -log2(count/total) under a unigram table built
// from a reference corpus. Tokens absent from the table get the table's
// maximum surprisal; an empty table scores everything 0.
class UnigramSurprisalScorer final : public TripleScorer {
 public:
  UnigramSurprisalScorer() = default;

  static UnigramSurprisalScorer FromTriples(
      std::span<const SemanticTriple> corpus);

  double Score(const SemanticTriple& triple) const override;

  std::size_t vocabulary_size() const { return counts_.size(); }

 private:
  std::unordered_map<std::string, std::size_t> counts_;
  std::size_t total_ = 0;
  double max_surprisal_ = 0.0;
};

// Scores read from an external source (e.g. a language model run offline),
// keyed by the formatted triple string. Unknown triples get `default_score`.
class TableScorer final : public TripleScorer {
 public:
  TableScorer(std::map<std::string, double> scores, double default_score);

  // Reads newline-delimited {"triple": "s | p | o", "score": x}.
  static TableScorer FromFile(const std::filesystem::path& path,
                              double default_score);

  double Score(const SemanticTriple& triple) const override;

 private:
  std::map<std::string, double> scores_;
  double default_score_;
};

}  // namespace dpst

#endif  // DPST_SCORER_H_
