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

#include "dpst/scorer.h"

#include <algorithm>
#include <cmath>

#include "dpst/error.h"
#include "dpst/text.h"
#include "json_util.h"

namespace dpst {

UnigramSurprisalScorer UnigramSurprisalScorer::FromTriples(
    std::span<const SemanticTriple> corpus) {
  UnigramSurprisalScorer scorer;
  for (const auto& t : corpus) {
    for (auto& token : LowercaseWordTokens(FormatTriple(t))) {
      ++scorer.counts_[std::move(token)];
      ++scorer.total_;
    }
  }
  std::size_t min_count = scorer.total_;
  for (const auto& [token, count] : scorer.counts_) {
    min_count = std::min(min_count, count);
  }
  if (scorer.total_ > 0) {
    scorer.max_surprisal_ =
        -std::log2(static_cast<double>(min_count) /
                   static_cast<double>(scorer.total_));
  }
  return scorer;
}

double UnigramSurprisalScorer::Score(const SemanticTriple& triple) const {
  if (total_ == 0) return 0.0;
  const auto tokens = LowercaseWordTokens(FormatTriple(triple));
  if (tokens.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& token : tokens) {
    const auto it = counts_.find(token);
    sum += it == counts_.end()
               ? max_surprisal_
               : -std::log2(static_cast<double>(it->second) /
                            static_cast<double>(total_));
  }
  return sum / static_cast<double>(tokens.size());
}

TableScorer::TableScorer(std::map<std::string, double> scores,
                         double default_score)
    : scores_(std::move(scores)), default_score_(default_score) {
  if (default_score_ < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "scores must be non-negative");
  }
  for (const auto& [key, value] : scores_) {
    if (!(value >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative score for '" + key + "'");
    }
  }
}

TableScorer TableScorer::FromFile(const std::filesystem::path& path,
                                  double default_score) {
  std::map<std::string, double> scores;
  internal::ForEachJsonLine(path, [&](const internal::Json& j) {
    const SemanticTriple t = ParseTriple(j.at("triple").get<std::string>());
    scores[FormatTriple(t)] = j.at("score").get<double>();
  });
  return TableScorer(std::move(scores), default_score);
}

double TableScorer::Score(const SemanticTriple& triple) const {
  const auto it = scores_.find(FormatTriple(triple));
  return it == scores_.end() ? default_score_ : it->second;
}

}  // namespace dpst
