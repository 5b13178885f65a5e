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

#include "dpst/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "dpst/error.h"
#include "dpst/text.h"
#include "json_util.h"

namespace dpst {
namespace {

using internal::Json;

double Ratio(double num, double den, const char* what) {
  if (den == 0.0 || !std::isfinite(den)) {
    throw Error(ErrorCode::kDivisionGuard,
                std::string(what) + " must be finite and non-zero");
  }
  return num / den;
}

std::string FormatFixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string FormatShortest(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

double MeanPairwiseSimilarity(
    std::span<const TextPair> pairs,
    std::span<const EmbeddingProvider* const> providers) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyInput, "no text pairs");
  if (providers.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no embedding providers");
  }
  std::vector<std::string> originals;
  std::vector<std::string> privatized;
  originals.reserve(pairs.size());
  privatized.reserve(pairs.size());
  for (const auto& p : pairs) {
    originals.push_back(p.original);
    privatized.push_back(p.privatized);
  }
  std::vector<double> per_pair(pairs.size(), 0.0);
  for (const EmbeddingProvider* provider : providers) {
    const auto a = EmbedBatch(originals, *provider);
    const auto b = EmbedBatch(privatized, *provider);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      per_pair[i] += CosineSimilarity(a[i], b[i]);
    }
  }
  double total = 0.0;
  for (double s : per_pair) total += s / static_cast<double>(providers.size());
  return total / static_cast<double>(pairs.size());
}

double RelativeGain(const EvalRecord& r) {
  return Ratio(r.utility_private, r.utility_original, "original utility") -
         Ratio(r.privacy_private, r.privacy_original, "original privacy score");
}

double AdjustedTaskUtility(double task, double majority_guess) {
  return (task - majority_guess) / 100.0;
}

double RelativeGainWithTask(const EvalRecord& record,
                            const TaskAdjustment& adj, double geval_private,
                            double geval_original) {
  EvalRecord r = record;
  r.utility_private =
      (geval_private + AdjustedTaskUtility(adj.task_private, adj.majority_guess)) /
      2.0;
  r.utility_original = (geval_original + AdjustedTaskUtility(
                                             adj.task_original,
                                             adj.majority_guess)) /
                       2.0;
  return RelativeGain(r);
}

double EmpiricalPrivacyGain(double privacy_original, double privacy_private) {
  return privacy_original - privacy_private;
}

EfficiencyReport MakeEfficiencyReport(double total_seconds,
                                      std::span<const std::string> docs) {
  std::size_t words = 0;
  for (const auto& d : docs) words += CountWords(d);
  return MakeEfficiencyReport(total_seconds, docs.size(), words);
}

EfficiencyReport MakeEfficiencyReport(double total_seconds,
                                      std::size_t doc_count,
                                      std::size_t word_count) {
  if (doc_count == 0) throw Error(ErrorCode::kEmptyInput, "no documents");
  EfficiencyReport r;
  r.total_seconds = total_seconds;
  r.doc_count = doc_count;
  r.word_count = word_count;
  r.avg_per_doc = total_seconds / static_cast<double>(doc_count);
  r.avg_per_word =
      word_count == 0 ? 0.0 : total_seconds / static_cast<double>(word_count);
  return r;
}

std::vector<ScoreRow> ReadScoreFile(const std::filesystem::path& path) {
  std::vector<ScoreRow> rows;
  internal::ForEachJsonLine(path, [&](const Json& j) {
    try {
      ScoreRow r;
      r.dataset = j.at("dataset").get<std::string>();
      r.method = j.at("method").get<std::string>();
      r.epsilon_base = j.value("epsilon_base", 0.0);
      r.geval = j.at("geval").get<double>();
      if (j.contains("task") && !j.at("task").is_null()) {
        r.task = j.at("task").get<double>();
      }
      if (j.contains("majority_guess") && !j.at("majority_guess").is_null()) {
        r.majority_guess = j.at("majority_guess").get<double>();
      }
      r.ep_static = j.at("ep_static").get<double>();
      r.ep_adaptive = j.at("ep_adaptive").get<double>();
      rows.push_back(std::move(r));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kFormatError,
                  "bad score row " + j.dump() + ": " + e.what());
    }
  });
  return rows;
}

std::vector<RelativeGainRow> ComputeRelativeGains(
    std::span<const ScoreRow> rows) {
  std::map<std::string, const ScoreRow*> baselines;
  for (const auto& r : rows) {
    if (r.method == kBaselineMethod) baselines[r.dataset] = &r;
  }
  std::vector<RelativeGainRow> out;
  for (const auto& r : rows) {
    if (r.method == kBaselineMethod) continue;
    const auto it = baselines.find(r.dataset);
    if (it == baselines.end()) {
      throw Error(ErrorCode::kFormatError,
                  "no baseline row for dataset " + r.dataset);
    }
    const ScoreRow& base = *it->second;
    RelativeGainRow g{r.dataset, r.method, r.epsilon_base, 0.0, 0.0, false};
    EvalRecord s{r.geval, base.geval, r.ep_static, base.ep_static};
    EvalRecord a{r.geval, base.geval, r.ep_adaptive, base.ep_adaptive};
    if (r.task && base.task && base.majority_guess) {
      const TaskAdjustment adj{*base.majority_guess, *base.task, *r.task};
      g.rg_static = RelativeGainWithTask(s, adj, r.geval, base.geval);
      g.rg_adaptive = RelativeGainWithTask(a, adj, r.geval, base.geval);
      g.task_adjusted = true;
    } else {
      g.rg_static = RelativeGain(s);
      g.rg_adaptive = RelativeGain(a);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string RelativeGainsToJsonLines(std::span<const RelativeGainRow> rows) {
  std::string out;
  for (const auto& r : rows) {
    out += Json{{"dataset", r.dataset},
                {"method", r.method},
                {"epsilon_base", r.epsilon_base},
                {"rg_static", r.rg_static},
                {"rg_adaptive", r.rg_adaptive},
                {"task_adjusted", r.task_adjusted}}
               .dump();
    out.push_back('\n');
  }
  return out;
}

std::string RelativeGainsToText(std::span<const RelativeGainRow> rows) {
  std::vector<std::vector<std::string>> cells = {
      {"dataset", "method", "eps", "RG(s)", "RG(a)", "task"}};
  for (const auto& r : rows) {
    cells.push_back({r.dataset, r.method, FormatShortest(r.epsilon_base),
                     FormatFixed(r.rg_static, 3), FormatFixed(r.rg_adaptive, 3),
                     r.task_adjusted ? "yes" : "no"});
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      // Numbers right-aligned, labels left-aligned.
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c >= 2 && c <= 4 ? pad + row[c] : row[c] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace dpst
