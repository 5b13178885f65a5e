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

#ifndef DPST_BUDGET_H_
#define DPST_BUDGET_H_

#include <cstddef>

namespace dpst {

// Base epsilon values used for document-level budgets.
inline constexpr double kBaseEpsilons[] = {0.1, 0.5, 1.0};

// Document budget = base_epsilon * floor(avg_words). Throws InvalidBudget
// unless both inputs are positive and the product is positive.
double DocumentBudget(double base_epsilon, double avg_words);

// Equal split of the document budget. Throws FallbackRequired when the
// document has no triples and InvalidBudget for a non-positive budget.
double PerTripleBudget(double document_epsilon, std::size_t triple_count);

enum class SplitPolicy { kEqual };

// Ledger for one document. per_triple_epsilon * triple_count equals
// document_epsilon whenever triple_count > 0.
struct PrivacyBudget {
  double base_epsilon = 0.0;
  double document_epsilon = 0.0;
  double per_triple_epsilon = 0.0;
  std::size_t triple_count = 0;
  SplitPolicy split_policy = SplitPolicy::kEqual;

  friend bool operator==(const PrivacyBudget&, const PrivacyBudget&) = default;
};

// How the document budget is derived from the base epsilon.
struct BudgetPolicy {
  enum class WordSource {
    // One average word count for a whole dataset.
    kDatasetAverage,
    // Each document's own whitespace word count.
    kPerDocument,
  };

  double base_epsilon = 0.1;
  WordSource source = WordSource::kDatasetAverage;
  double avg_words = 0.0;  // used with kDatasetAverage
};

// Throws as DocumentBudget / PerTripleBudget do.
PrivacyBudget AllocateBudget(const BudgetPolicy& policy, double document_words,
                             std::size_t triple_count);

}  // namespace dpst

#endif  // DPST_BUDGET_H_
