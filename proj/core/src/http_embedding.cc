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

#include "dpst/http_embedding.h"

#include "http_util.h"

namespace dpst {

HttpEmbeddingProvider::HttpEmbeddingProvider(HttpOptions options,
                                             std::size_t dimension)
    : poster_(std::make_shared<internal::JsonPoster>(std::move(options))),
      dimension_(dimension) {
  if (dimension_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be > 0");
  }
}

HttpEmbeddingProvider::~HttpEmbeddingProvider() = default;

std::vector<EmbeddingVector> HttpEmbeddingProvider::EmbedBatch(
    std::span<const std::string> texts) const {
  if (texts.empty()) return {};
  internal::Json body;
  body["texts"] = std::vector<std::string>(texts.begin(), texts.end());
  const internal::Json reply =
      poster_->Post("/embed", body, ErrorCode::kProviderUnavailable);
  if (!reply.contains("vectors") || !reply.at("vectors").is_array() ||
      reply.at("vectors").size() != texts.size()) {
    throw Error(ErrorCode::kProviderUnavailable,
                "embedding reply lacks one vector per text");
  }
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& row : reply.at("vectors")) {
    const auto raw = row.get<std::vector<double>>();
    if (raw.size() != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "service returned " + std::to_string(raw.size()) +
                      "-d vector, expected " + std::to_string(dimension_));
    }
    out.push_back(NormalizeToUnit(raw));
  }
  return out;
}

}  // namespace dpst
