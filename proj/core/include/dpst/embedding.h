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

#ifndef DPST_EMBEDDING_H_
#define DPST_EMBEDDING_H_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dpst/error.h"

namespace dpst {

inline constexpr std::size_t kDefaultEmbeddingDimension = 32;

// Unit-norm embedding of a triple string (or any text).
struct EmbeddingVector {
  std::vector<float> values;

  std::size_t dimension() const { return values.size(); }
  std::span<const float> span() const { return values; }
  friend bool operator==(const EmbeddingVector&,
                         const EmbeddingVector&) = default;
};

// dot(u, v) / (|u| |v|), accumulated in double and clamped to [-1, 1].
// Zero vectors have similarity 0 with everything.
template <std::floating_point T>
double CosineSimilarity(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cosine of " + std::to_string(u.size()) + "-d and " +
                    std::to_string(v.size()) + "-d vectors");
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a = u[i];
    const double b = v[i];
    dot += a * b;
    uu += a * a;
    vv += b * b;
  }
  if (uu == 0.0 || vv == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

inline double CosineSimilarity(const EmbeddingVector& u,
                               const EmbeddingVector& v) {
  return CosineSimilarity(u.span(), v.span());
}

// Exponential-mechanism utility: cosine with negatives mapped to 0, so its
// range (and sensitivity) is exactly 1.
template <std::floating_point T>
double ClampedUtility(std::span<const T> u, std::span<const T> v) {
  return std::max(0.0, CosineSimilarity(u, v));
}

inline double ClampedUtility(const EmbeddingVector& u,
                             const EmbeddingVector& v) {
  return ClampedUtility(u.span(), v.span());
}

// Scales to unit Euclidean norm. Throws InvalidArgument on a zero vector.
EmbeddingVector NormalizeToUnit(std::span<const double> raw);
EmbeddingVector NormalizeToUnit(std::span<const float> raw);

double EuclideanNorm(std::span<const float> v);

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::size_t dimension() const = 0;

  // One vector per text, in input order.
  virtual std::vector<EmbeddingVector> EmbedBatch(
      std::span<const std::string> texts) const = 0;
};

// Checked entry point: verifies count, dimension, and unit norm (1e-6) of
// what the provider returned.
std::vector<EmbeddingVector> EmbedBatch(std::span<const std::string> texts,
                                        const EmbeddingProvider& provider);

EmbeddingVector EmbedOne(const std::string& text,
                         const EmbeddingProvider& provider);

// Hash-seeded vectors: SplitMix64 stream keyed on (text, seed) produces
// `dimension` standard normal deviates which are then normalized, giving a
// reproducible point uniform on the sphere.
class StubEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit StubEmbeddingProvider(
      std::size_t dimension = kDefaultEmbeddingDimension,
      std::uint64_t seed = 0);

  std::size_t dimension() const override { return dimension_; }
  std::uint64_t seed() const { return seed_; }

  std::vector<EmbeddingVector> EmbedBatch(
      std::span<const std::string> texts) const override;

 private:
  std::size_t dimension_;
  std::uint64_t seed_;
};

// Lookup in a DPSTVEC1 vector file plus its companion key file. Keys are
// formatted triple strings; rows are renormalized on load.
class PrecomputedEmbeddingProvider final : public EmbeddingProvider {
 public:
  // Throws DimensionMismatch if the file dimension differs from
  // `expected_dimension` (when non-zero).
  static PrecomputedEmbeddingProvider FromFiles(
      const std::filesystem::path& vectors_path,
      const std::filesystem::path& keys_path,
      std::size_t expected_dimension = 0);

  std::size_t dimension() const override { return dimension_; }
  std::size_t size() const { return index_.size(); }

  // Throws ProviderUnavailable for a text with no stored row.
  std::vector<EmbeddingVector> EmbedBatch(
      std::span<const std::string> texts) const override;

 private:
  std::size_t dimension_ = 0;
  std::vector<EmbeddingVector> rows_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace dpst

#endif  // DPST_EMBEDDING_H_
