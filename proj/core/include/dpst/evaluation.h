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

#ifndef DPST_EVALUATION_H_
#define DPST_EVALUATION_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpst/embedding.h"

namespace dpst {

struct TextPair {
  std::string original;
  std::string privatized;
};

// Per pair: mean cosine over providers. Returns the mean over pairs.
// Throws EmptyInput when either list is empty.
double MeanPairwiseSimilarity(
    std::span<const TextPair> pairs,
    std::span<const EmbeddingProvider* const> providers);

// Utilities are on whatever scale the caller uses; EP values are attacker
// scores in percent.
struct EvalRecord {
  double utility_private = 0.0;
  double utility_original = 0.0;
  double privacy_private = 0.0;
  double privacy_original = 0.0;
};

// U_p/U_o - EP_p/EP_o. Throws DivisionGuard if U_o or EP_o is zero.
double RelativeGain(const EvalRecord& record);

struct TaskAdjustment {
  double majority_guess = 0.0;  // percent
  double task_original = 0.0;   // percent
  double task_private = 0.0;    // percent
};

// (task - majority_guess) / 100.
double AdjustedTaskUtility(double task, double majority_guess);

// Utilities become mean(geval, AdjustedTaskUtility(task)) on each side; the
// record's utility fields are ignored.
double RelativeGainWithTask(const EvalRecord& record,
                            const TaskAdjustment& adj, double geval_private,
                            double geval_original);

// EP_o - EP_p.
double EmpiricalPrivacyGain(double privacy_original, double privacy_private);

struct EfficiencyReport {
  double total_seconds = 0.0;
  std::size_t doc_count = 0;
  std::size_t word_count = 0;
  double avg_per_doc = 0.0;
  double avg_per_word = 0.0;
};

// Words are whitespace tokens. Throws EmptyInput for no documents.
// avg_per_word is 0 when the documents hold no words.
EfficiencyReport MakeEfficiencyReport(double total_seconds,
                                      std::span<const std::string> docs);
EfficiencyReport MakeEfficiencyReport(double total_seconds,
                                      std::size_t doc_count,
                                      std::size_t word_count);

// One line of a score file. The row with method "baseline" holds the
// original-text scores for its dataset; it may also carry "majority_guess"
// for datasets with a downstream task.
struct ScoreRow {
  std::string dataset;
  std::string method;
  double epsilon_base = 0.0;
  double geval = 0.0;
  std::optional<double> task;
  std::optional<double> majority_guess;
  double ep_static = 0.0;
  double ep_adaptive = 0.0;
};

inline constexpr char kBaselineMethod[] = "baseline";

std::vector<ScoreRow> ReadScoreFile(const std::filesystem::path& path);

struct RelativeGainRow {
  std::string dataset;
  std::string method;
  double epsilon_base = 0.0;
  double rg_static = 0.0;
  double rg_adaptive = 0.0;
  bool task_adjusted = false;
};

// Every non-baseline row against its dataset's baseline. Rows use the
// task-adjusted form when both the row has a task score and the baseline
// has task and majority_guess. Throws FormatError when a dataset has no
// baseline row.
std::vector<RelativeGainRow> ComputeRelativeGains(
    std::span<const ScoreRow> rows);

// One JSON object per line.
std::string RelativeGainsToJsonLines(std::span<const RelativeGainRow> rows);
// Column-aligned text table with a header.
std::string RelativeGainsToText(std::span<const RelativeGainRow> rows);

}  // namespace dpst

#endif  // DPST_EVALUATION_H_
