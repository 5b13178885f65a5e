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

#include "dpst/mechanism.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "dpst/error.h"

namespace dpst {

std::vector<double> EmLogProbabilities(std::span<const double> utilities,
                                       double epsilon,
                                       const MechanismConfig& /*config*/) {
  if (utilities.empty()) {
    throw Error(ErrorCode::kEmptyNeighborhood, "no candidate outputs");
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidBudget,
                "epsilon must be finite and >= 0, got " +
                    std::to_string(epsilon));
  }
  const double scale = epsilon / (2.0 * MechanismConfig::kSensitivity);
  std::vector<double> logits(utilities.size());
  double max_logit = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    const double u = utilities[i];
    if (!(u >= 0.0 && u <= 1.0)) {
      throw Error(ErrorCode::kInvalidUtility,
                  "utility " + std::to_string(u) + " outside [0, 1]");
    }
    logits[i] = scale * u;
    max_logit = std::max(max_logit, logits[i]);
  }
  double sum = 0.0;
  for (double z : logits) sum += std::exp(z - max_logit);
  const double log_norm = max_logit + std::log(sum);
  for (double& z : logits) z -= log_norm;
  return logits;
}

std::vector<double> EmProbabilities(std::span<const double> utilities,
                                    double epsilon,
                                    const MechanismConfig& config) {
  std::vector<double> p = EmLogProbabilities(utilities, epsilon, config);
  double sum = 0.0;
  for (double& x : p) {
    x = std::exp(x);
    sum += x;
  }
  // Renormalize away the last ulp of drift.
  for (double& x : p) x /= sum;
  return p;
}

std::size_t EmSample(std::span<const double> probabilities, Rng& rng) {
  if (probabilities.empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "empty distribution");
  }
  double sum = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "negative or non-finite probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidDistribution,
                "probabilities sum to " + std::to_string(sum));
  }
  std::size_t best = probabilities.size();
  double best_key = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    // One uniform per entry regardless of p, so the stream position does
    // not depend on the probabilities.
    const double gumbel = -std::log(-std::log(rng.UniformOpen()));
    if (probabilities[i] == 0.0) continue;
    const double key = std::log(probabilities[i]) + gumbel;
    if (best == probabilities.size() || key > best_key) {
      best = i;
      best_key = key;
    }
  }
  return best;
}

std::size_t EmSample(std::span<const double> probabilities,
                     std::optional<std::uint64_t> rng_seed) {
  std::uint64_t seed = 0;
  if (rng_seed) {
    seed = *rng_seed;
  } else {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  Rng rng(seed);
  return EmSample(probabilities, rng);
}

}  // namespace dpst
