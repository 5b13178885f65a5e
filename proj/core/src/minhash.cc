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

#include "dpst/minhash.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "dpst/error.h"
#include "dpst/random.h"
#include "dpst/text.h"

namespace dpst {
namespace {

__extension__ using Uint128 = unsigned __int128;

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t MulAddMod61(std::uint64_t a, std::uint64_t x, std::uint64_t b) {
  const Uint128 v = static_cast<Uint128>(a) * x + b;
  // Fold twice; 2^61 == 1 (mod p).
  std::uint64_t r = static_cast<std::uint64_t>(v & kMersenne61) +
                    static_cast<std::uint64_t>(v >> 61);
  r = (r & kMersenne61) + (r >> 61);
  return r >= kMersenne61 ? r - kMersenne61 : r;
}

struct Permutations {
  std::uint64_t a[kMinHashPermutations];
  std::uint64_t b[kMinHashPermutations];

  explicit Permutations(std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = 0; i < kMinHashPermutations; ++i) {
      a[i] = 1 + rng.Below(kMersenne61 - 1);
      b[i] = rng.Below(kMersenne61);
    }
  }
};

}  // namespace

MinHashSignature ComputeMinHash(std::span<const std::uint64_t> element_hashes,
                                std::uint64_t seed) {
  MinHashSignature sig;
  sig.values.assign(kMinHashPermutations, MinHashSignature::kEmptySentinel);
  if (element_hashes.empty()) return sig;
  const Permutations perms(seed);
  for (std::uint64_t h : element_hashes) {
    const std::uint64_t x = SplitMix64(h) % kMersenne61;
    for (std::size_t i = 0; i < kMinHashPermutations; ++i) {
      sig.values[i] = std::min(sig.values[i], MulAddMod61(perms.a[i], x,
                                                          perms.b[i]));
    }
  }
  return sig;
}

MinHashSignature ComputeMinHash(std::string_view text, std::uint64_t seed) {
  std::vector<std::uint64_t> hashes;
  for (const auto& token : LowercaseWordTokens(text)) {
    hashes.push_back(Fnv1a64(token));
  }
  return ComputeMinHash(hashes, seed);
}

double EstimateJaccard(const MinHashSignature& a, const MinHashSignature& b) {
  if (a.values.size() != b.values.size() || a.values.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "signatures differ in permutation count");
  }
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    same += a.values[i] == b.values[i] ? 1 : 0;
  }
  return static_cast<double>(same) / static_cast<double>(a.values.size());
}

LshBanding ChooseBanding(double threshold, std::size_t num_permutations) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "LSH threshold must lie in (0, 1)");
  }
  LshBanding best{num_permutations, 1};
  double best_gap = 2.0;
  for (std::size_t rows = 1; rows <= num_permutations; ++rows) {
    if (num_permutations % rows != 0) continue;
    const std::size_t bands = num_permutations / rows;
    const double t = std::pow(1.0 / static_cast<double>(bands),
                              1.0 / static_cast<double>(rows));
    const double gap = std::abs(t - threshold);
    if (gap < best_gap) {
      best_gap = gap;
      best = {bands, rows};
    }
  }
  return best;
}

std::vector<SemanticTriple> DedupTriples(
    std::span<const SemanticTriple> triples, const TripleScorer& scorer,
    double threshold, std::uint64_t seed) {
  const LshBanding banding = ChooseBanding(threshold);
  const std::size_t n = triples.size();

  std::vector<std::string> keys;
  std::vector<double> scores;
  keys.reserve(n);
  scores.reserve(n);
  for (const auto& t : triples) {
    keys.push_back(FormatTriple(t));
    scores.push_back(scorer.Score(t));
  }

  // Band hashes per triple, row-major.
  std::vector<std::uint64_t> band_hash(n * banding.bands);
  for (std::size_t i = 0; i < n; ++i) {
    const MinHashSignature sig = ComputeMinHash(keys[i], seed);
    for (std::size_t band = 0; band < banding.bands; ++band) {
      std::uint64_t h = SplitMix64(band);
      for (std::size_t r = 0; r < banding.rows; ++r) {
        h = SplitMix64(h ^ sig.values[band * banding.rows + r]);
      }
      band_hash[i * banding.bands + band] = h;
    }
  }

  // Best first; the earliest index among exact duplicates.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (scores[a] != scores[b]) return scores[a] < scores[b];
                     return keys[a] < keys[b];
                   });

  // A candidate survives unless a better survivor already claimed one of
  // its buckets. No chaining: a dropped triple claims nothing.
  std::vector<std::unordered_set<std::uint64_t>> claimed(banding.bands);
  std::vector<bool> keep(n, false);
  for (std::size_t i : order) {
    bool collides = false;
    for (std::size_t band = 0; band < banding.bands && !collides; ++band) {
      collides = claimed[band].contains(band_hash[i * banding.bands + band]);
    }
    if (collides) continue;
    keep[i] = true;
    for (std::size_t band = 0; band < banding.bands; ++band) {
      claimed[band].insert(band_hash[i * banding.bands + band]);
    }
  }

  std::vector<SemanticTriple> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) out.push_back(triples[i]);
  }
  return out;
}

}  // namespace dpst
