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

#ifndef DPST_MECHANISM_H_
#define DPST_MECHANISM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dpst/random.h"

namespace dpst {

struct MechanismConfig {
  // Utilities are clamped cosines in [0, 1], so the sensitivity is exactly 1.
  static constexpr double kSensitivity = 1.0;

  // Seed for the selection draw; unseeded draws use std::random_device.
  std::optional<std::uint64_t> rng_seed;
};

// Exponential mechanism over one neighborhood:
//   p_i = exp(eps * u_i / (2 du)) / sum_j exp(eps * u_j / (2 du)),
// evaluated with max-subtraction in log space. epsilon = 0 gives the
// uniform distribution.
//
// Throws EmptyNeighborhood for no utilities, InvalidUtility for a value
// outside [0, 1] (or NaN), InvalidBudget for negative or non-finite
// epsilon.
std::vector<double> EmProbabilities(std::span<const double> utilities,
                                    double epsilon,
                                    const MechanismConfig& config = {});

// Log of the normalized probabilities, same contract as EmProbabilities.
std::vector<double> EmLogProbabilities(std::span<const double> utilities,
                                       double epsilon,
                                       const MechanismConfig& config = {});

// Categorical draw by the Gumbel-max trick on log p. Entries with p = 0 are
// never selected. Throws InvalidDistribution for negative entries or a sum
// off 1 by more than 1e-9.
std::size_t EmSample(std::span<const double> probabilities, Rng& rng);
std::size_t EmSample(std::span<const double> probabilities,
                     std::optional<std::uint64_t> rng_seed);

}  // namespace dpst

#endif  // DPST_MECHANISM_H_
