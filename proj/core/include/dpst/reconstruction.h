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

#ifndef DPST_RECONSTRUCTION_H_
#define DPST_RECONSTRUCTION_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpst/http.h"
#include "dpst/triples.h"

namespace dpst {

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;

  friend bool operator==(const ChatMessage&, const ChatMessage&) = default;
};

// Few-shot prompt for turning triples back into prose: a system
// instruction, three worked user/assistant pairs, then the user turn with
// the private triples.
struct PromptTemplate {
  std::string system_instruction;
  std::vector<ChatMessage> few_shot_turns;
};

const PromptTemplate& ReconstructionPromptTemplate();

// Python-literal list of {'object': o, 'property': p, 'subject': s} dicts.
std::string RenderTripleList(std::span<const SemanticTriple> triples);

// System message, the six few-shot messages, then
// "Input triples: <RenderTripleList(triples)>". Throws EmptyTripleList.
std::vector<ChatMessage> BuildPrompt(std::span<const SemanticTriple> triples);

// Removes one leading "Output text:" (and the whitespace after it).
std::string StripOutputPrefix(std::string_view completion);

// "<s> <p> <o>." per triple, joined by single spaces.
std::string JoinTriples(std::span<const SemanticTriple> triples);

class CompletionClient {
 public:
  virtual ~CompletionClient() = default;
  // Content of the first choice. Throws CompletionFailed.
  virtual std::string Complete(std::span<const ChatMessage> messages) const = 0;
};

namespace internal {
class JsonPoster;
}

inline HttpOptions DefaultCompletionHttpOptions() {
  HttpOptions http;
  http.max_in_flight = 4;
  return http;
}

struct CompletionOptions {
  HttpOptions http = DefaultCompletionHttpOptions();
  std::string model = "llama-3.2-1b-instruct";
  double temperature = 0.0;
  std::optional<int> max_tokens;
};

inline constexpr char kApiKeyEnvVar[] = "DPST_LLM_API_KEY";

// OpenAI-compatible chat completions: POST <endpoint>/v1/chat/completions.
// When no bearer token is configured, DPST_LLM_API_KEY is used if set.
class HttpCompletionClient final : public CompletionClient {
 public:
  explicit HttpCompletionClient(CompletionOptions options);
  ~HttpCompletionClient() override;

  std::string Complete(std::span<const ChatMessage> messages) const override;

 private:
  CompletionOptions options_;
  std::shared_ptr<const internal::JsonPoster> poster_;
};

// Turns private triples into a document.
class Reconstructor {
 public:
  virtual ~Reconstructor() = default;
  virtual std::string Reconstruct(
      std::span<const SemanticTriple> triples) const = 0;
};

// Deterministic, offline: JoinTriples.
class OfflineJoiner final : public Reconstructor {
 public:
  std::string Reconstruct(
      std::span<const SemanticTriple> triples) const override;
};

// Prompts an LLM and strips the "Output text:" echo. With
// `degrade_to_joiner`, a CompletionFailed falls back to JoinTriples instead
// of propagating.
class LlmReconstructor final : public Reconstructor {
 public:
  explicit LlmReconstructor(const CompletionClient& client,
                            bool degrade_to_joiner = false);

  std::string Reconstruct(
      std::span<const SemanticTriple> triples) const override;

 private:
  const CompletionClient& client_;
  bool degrade_to_joiner_;
};

// Throws EmptyTripleList for no triples; callers handle fallback documents
// before getting here.
std::string ReconstructDocument(std::span<const SemanticTriple> triples,
                                const Reconstructor& reconstructor);

}  // namespace dpst

#endif  // DPST_RECONSTRUCTION_H_
