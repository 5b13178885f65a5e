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

#ifndef DPST_HTTP_EMBEDDING_H_
#define DPST_HTTP_EMBEDDING_H_

#include <memory>

#include "dpst/embedding.h"
#include "dpst/http.h"

namespace dpst {

namespace internal {
class JsonPoster;
}

// Remote embedding service: POST <endpoint>/embed {"texts": [...]} answered
// by {"vectors": [[...], ...]}. Vectors are renormalized on receipt; any
// failure after retries is ProviderUnavailable.
class HttpEmbeddingProvider final : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(HttpOptions options, std::size_t dimension);
  ~HttpEmbeddingProvider() override;

  std::size_t dimension() const override { return dimension_; }

  std::vector<EmbeddingVector> EmbedBatch(
      std::span<const std::string> texts) const override;

 private:
  std::shared_ptr<const internal::JsonPoster> poster_;
  std::size_t dimension_;
};

}  // namespace dpst

#endif  // DPST_HTTP_EMBEDDING_H_
