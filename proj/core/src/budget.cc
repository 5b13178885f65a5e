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

#include "dpst/budget.h"

#include <cmath>
#include <string>

#include "dpst/error.h"

namespace dpst {

double DocumentBudget(double base_epsilon, double avg_words) {
  if (!(base_epsilon > 0.0) || !(avg_words > 0.0) ||
      !std::isfinite(base_epsilon) || !std::isfinite(avg_words)) {
    throw Error(ErrorCode::kInvalidBudget,
                "base epsilon and average word count must be positive");
  }
  const double budget = base_epsilon * std::floor(avg_words);
  if (!(budget > 0.0)) {
    throw Error(ErrorCode::kInvalidBudget,
                "average word count below one gives a zero budget");
  }
  return budget;
}

double PerTripleBudget(double document_epsilon, std::size_t triple_count) {
  if (!(document_epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidBudget,
                "document epsilon must be positive, got " +
                    std::to_string(document_epsilon));
  }
  if (triple_count == 0) {
    throw Error(ErrorCode::kFallbackRequired,
                "no triples to spend the budget on");
  }
  return document_epsilon / static_cast<double>(triple_count);
}

PrivacyBudget AllocateBudget(const BudgetPolicy& policy, double document_words,
                             std::size_t triple_count) {
  const double words =
      policy.source == BudgetPolicy::WordSource::kDatasetAverage
          ? policy.avg_words
          : document_words;
  PrivacyBudget b;
  b.base_epsilon = policy.base_epsilon;
  b.document_epsilon = DocumentBudget(policy.base_epsilon, words);
  b.per_triple_epsilon = PerTripleBudget(b.document_epsilon, triple_count);
  b.triple_count = triple_count;
  return b;
}

}  // namespace dpst
