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

#include "dpst/embedding.h"

#include <string>

#include "dpst/random.h"
#include "dpst/vector_file.h"

namespace dpst {
namespace {

constexpr double kUnitNormTolerance = 1e-6;

template <typename T>
EmbeddingVector Normalize(std::span<const T> raw) {
  double sq = 0.0;
  for (T x : raw) sq += static_cast<double>(x) * static_cast<double>(x);
  if (sq == 0.0 || !std::isfinite(sq)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot normalize zero vector");
  }
  const double inv = 1.0 / std::sqrt(sq);
  EmbeddingVector out;
  out.values.reserve(raw.size());
  for (T x : raw) out.values.push_back(static_cast<float>(x * inv));
  return out;
}

}  // namespace

EmbeddingVector NormalizeToUnit(std::span<const double> raw) {
  return Normalize(raw);
}

EmbeddingVector NormalizeToUnit(std::span<const float> raw) {
  return Normalize(raw);
}

double EuclideanNorm(std::span<const float> v) {
  double sq = 0.0;
  for (float x : v) sq += static_cast<double>(x) * x;
  return std::sqrt(sq);
}

std::vector<EmbeddingVector> EmbedBatch(std::span<const std::string> texts,
                                        const EmbeddingProvider& provider) {
  std::vector<EmbeddingVector> out = provider.EmbedBatch(texts);
  if (out.size() != texts.size()) {
    throw Error(ErrorCode::kProviderUnavailable,
                "provider returned " + std::to_string(out.size()) +
                    " vectors for " + std::to_string(texts.size()) + " texts");
  }
  for (const auto& v : out) {
    if (v.dimension() != provider.dimension()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "provider returned a " + std::to_string(v.dimension()) +
                      "-d vector, expected " +
                      std::to_string(provider.dimension()));
    }
    if (std::abs(EuclideanNorm(v.span()) - 1.0) > kUnitNormTolerance) {
      throw Error(ErrorCode::kProviderUnavailable,
                  "provider returned a non-unit vector");
    }
  }
  return out;
}

EmbeddingVector EmbedOne(const std::string& text,
                         const EmbeddingProvider& provider) {
  return EmbedBatch(std::span<const std::string>(&text, 1), provider).front();
}

StubEmbeddingProvider::StubEmbeddingProvider(std::size_t dimension,
                                             std::uint64_t seed)
    : dimension_(dimension), seed_(seed) {
  if (dimension_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be > 0");
  }
}

std::vector<EmbeddingVector> StubEmbeddingProvider::EmbedBatch(
    std::span<const std::string> texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  std::vector<double> raw(dimension_);
  for (const auto& text : texts) {
    Rng rng(SplitMix64(Fnv1a64(text) ^ SplitMix64(seed_)));
    for (double& x : raw) x = rng.StandardNormal();
    out.push_back(NormalizeToUnit(raw));
  }
  return out;
}

PrecomputedEmbeddingProvider PrecomputedEmbeddingProvider::FromFiles(
    const std::filesystem::path& vectors_path,
    const std::filesystem::path& keys_path, std::size_t expected_dimension) {
  const VectorMatrix m = ReadVectorFile(vectors_path);
  if (expected_dimension != 0 && m.dimension != expected_dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                vectors_path.string() + " holds " +
                    std::to_string(m.dimension) + "-d vectors, expected " +
                    std::to_string(expected_dimension));
  }
  const std::vector<std::string> keys = ReadKeyFile(keys_path);
  if (keys.size() != m.rows()) {
    throw Error(ErrorCode::kFormatError,
                "key file has " + std::to_string(keys.size()) +
                    " lines for " + std::to_string(m.rows()) + " vectors");
  }
  PrecomputedEmbeddingProvider p;
  p.dimension_ = m.dimension;
  p.rows_.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    p.rows_.push_back(NormalizeToUnit(m.row(i)));
    p.index_.emplace(keys[i], i);
  }
  return p;
}

std::vector<EmbeddingVector> PrecomputedEmbeddingProvider::EmbedBatch(
    std::span<const std::string> texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    const auto it = index_.find(text);
    if (it == index_.end()) {
      throw Error(ErrorCode::kProviderUnavailable,
                  "no precomputed vector for '" + text + "'");
    }
    out.push_back(rows_[it->second]);
  }
  return out;
}

}  // namespace dpst
