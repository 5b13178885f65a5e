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

#ifndef DPST_MINHASH_H_
#define DPST_MINHASH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "dpst/scorer.h"
#include "dpst/triples.h"

namespace dpst {

inline constexpr std::size_t kMinHashPermutations = 128;
inline constexpr double kDefaultDedupThreshold = 0.4;

// 128 minima of seeded universal hashes (a*x + b mod 2^61-1) over a
// shingle set. The empty set maps to the all-max sentinel.
struct MinHashSignature {
  std::vector<std::uint64_t> values;

  static constexpr std::uint64_t kEmptySentinel =
      std::numeric_limits<std::uint64_t>::max();

  std::size_t num_permutations() const { return values.size(); }
  friend bool operator==(const MinHashSignature&,
                         const MinHashSignature&) = default;
};

// Shingles are the lowercase word tokens of `text` (see LowercaseWordTokens).
MinHashSignature ComputeMinHash(std::string_view text, std::uint64_t seed);

// Signature over pre-hashed set elements. Duplicates are harmless.
MinHashSignature ComputeMinHash(std::span<const std::uint64_t> element_hashes,
                                std::uint64_t seed);

// Fraction of agreeing positions.
double EstimateJaccard(const MinHashSignature& a, const MinHashSignature& b);

struct LshBanding {
  std::size_t bands;
  std::size_t rows;
};

// Picks bands x rows = num_permutations whose collision threshold
// (1/bands)^(1/rows) lies closest to `threshold`. 0.4 with 128 permutations
// gives 32 x 4.
LshBanding ChooseBanding(double threshold,
                         std::size_t num_permutations = kMinHashPermutations);

// Near-duplicate filter. Triples are visited from lowest to highest score
// (ties by formatted string, then position); each one is kept unless it
// shares an LSH band bucket with a triple already kept. Every bucket ends
// up with at most one survivor. Survivors keep their input
// order. Throws InvalidArgument unless 0 < threshold < 1.
std::vector<SemanticTriple> DedupTriples(
    std::span<const SemanticTriple> triples, const TripleScorer& scorer,
    double threshold, std::uint64_t seed);

}  // namespace dpst

#endif  // DPST_MINHASH_H_
