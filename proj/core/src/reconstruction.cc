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

#include "dpst/reconstruction.h"

#include <cstdio>
#include <cstdlib>

#include "dpst/error.h"
#include "dpst/text.h"
#include "http_util.h"

namespace dpst {
namespace {

constexpr char kSystemInstruction[] =
    "Generate a concise text for the given set of triples. Ensure that the "
    "generated output only includes the provided information from the "
    "triples, but feel free to fill in the gaps where sensible. If necessary, "
    "ignore triples that do not fit into the larger context. It is very "
    "important that the output is grammatically correct, natural, and "
    "logical. Provide a text that captures the semantic meaning of the "
    "triples, without being too verbose or lengthy. Do not provide any "
    "further explanation, only provide the output text.";

constexpr std::string_view kInputPrefix = "Input triples: ";
constexpr std::string_view kOutputPrefix = "Output text:";

struct Exemplar {
  std::vector<SemanticTriple> triples;
  const char* output;
};

std::vector<Exemplar> Exemplars() {
  return {
      {{{"Tennessee_Titans", "coach", "Mike_Mularkey"}},
       "Mike Mularkey is the coach of the Tennessee Titans."},
      {{{"Alfred_N._Phillips", "successor", "Albert_E._Austin"},
        {"Alfred_N._Phillips", "birthPlace", "Connecticut"},
        {"Alfred_N._Phillips", "office",
         "United_States_House_of_Representatives"}},
       "Albert E. Austin succeeded Alfred N. Phillips who was born in "
       "Connecticut and worked at the United States House of "
       "Representatives."},
      {{{"Alan_B._Miller_Hall", "owner", "College_of_William_&_Mary"},
        {"Alan_B._Miller_Hall", "completionDate", "2009-06-01"},
        {"Alan_B._Miller_Hall", "address", "101 Ukrop Way"},
        {"Alan_B._Miller_Hall", "location", "Williamsburg,_Virginia"},
        {"Alan_B._Miller_Hall", "architect", "Robert_A._M._Stern"}},
       "The Alan B Miller Hall's location is 101 Ukrop Way, Williamsburg, "
       "Virginia. It was designed by Robert A.M. Stern and was completed on "
       "1 June 2009. Its owner is the College of William and Mary."},
  };
}

// Python str repr: single quotes unless the text has a single quote and no
// double quote.
std::string PyRepr(std::string_view s) {
  const bool has_single = s.find('\'') != std::string_view::npos;
  const bool has_double = s.find('"') != std::string_view::npos;
  const char quote = has_single && !has_double ? '"' : '\'';
  std::string out(1, quote);
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (c == quote || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\r') {
      out += "\\r";
    } else if (c == '\t') {
      out += "\\t";
    } else if (u < 0x20 || u == 0x7F) {
      char buf[5];
      std::snprintf(buf, sizeof(buf), "\\x%02x", u);
      out += buf;
    } else {
      out.push_back(c);
    }
  }
  out.push_back(quote);
  return out;
}

}  // namespace

const PromptTemplate& ReconstructionPromptTemplate() {
  static const PromptTemplate* const kTemplate = [] {
    auto* t = new PromptTemplate;
    t->system_instruction = kSystemInstruction;
    for (const auto& ex : Exemplars()) {
      t->few_shot_turns.push_back(
          {"user", std::string(kInputPrefix) + RenderTripleList(ex.triples)});
      t->few_shot_turns.push_back(
          {"assistant", std::string(kOutputPrefix) + " " + ex.output});
    }
    return t;
  }();
  return *kTemplate;
}

std::string RenderTripleList(std::span<const SemanticTriple> triples) {
  std::string out = "[";
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (i > 0) out += ", ";
    out += "{'object': " + PyRepr(triples[i].object) +
           ", 'property': " + PyRepr(triples[i].predicate) +
           ", 'subject': " + PyRepr(triples[i].subject) + "}";
  }
  out += "]";
  return out;
}

std::vector<ChatMessage> BuildPrompt(std::span<const SemanticTriple> triples) {
  if (triples.empty()) {
    throw Error(ErrorCode::kEmptyTripleList, "nothing to reconstruct");
  }
  const PromptTemplate& tmpl = ReconstructionPromptTemplate();
  std::vector<ChatMessage> messages;
  messages.reserve(tmpl.few_shot_turns.size() + 2);
  messages.push_back({"system", tmpl.system_instruction});
  messages.insert(messages.end(), tmpl.few_shot_turns.begin(),
                  tmpl.few_shot_turns.end());
  messages.push_back(
      {"user", std::string(kInputPrefix) + RenderTripleList(triples)});
  return messages;
}

std::string StripOutputPrefix(std::string_view completion) {
  std::string_view s = Trim(completion);
  if (s.starts_with(kOutputPrefix)) {
    s.remove_prefix(kOutputPrefix.size());
    s = Trim(s);
  }
  return std::string(s);
}

std::string JoinTriples(std::span<const SemanticTriple> triples) {
  std::string out;
  for (const auto& t : triples) {
    if (!out.empty()) out.push_back(' ');
    out += t.subject + " " + t.predicate + " " + t.object + ".";
  }
  return out;
}

HttpCompletionClient::HttpCompletionClient(CompletionOptions options)
    : options_(std::move(options)) {
  if (options_.http.bearer_token.empty()) {
    if (const char* key = std::getenv(kApiKeyEnvVar); key != nullptr) {
      options_.http.bearer_token = key;
    }
  }
  poster_ = std::make_shared<internal::JsonPoster>(options_.http);
}

HttpCompletionClient::~HttpCompletionClient() = default;

std::string HttpCompletionClient::Complete(
    std::span<const ChatMessage> messages) const {
  internal::Json body;
  body["model"] = options_.model;
  body["temperature"] = options_.temperature;
  if (options_.max_tokens) body["max_tokens"] = *options_.max_tokens;
  internal::Json msgs = internal::Json::array();
  for (const auto& m : messages) {
    msgs.push_back({{"role", m.role}, {"content", m.content}});
  }
  body["messages"] = std::move(msgs);
  const internal::Json reply =
      poster_->Post("/v1/chat/completions", body, ErrorCode::kCompletionFailed);
  try {
    return reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const internal::Json::exception& e) {
    throw Error(ErrorCode::kCompletionFailed,
                std::string("malformed completion reply: ") + e.what());
  }
}

std::string OfflineJoiner::Reconstruct(
    std::span<const SemanticTriple> triples) const {
  return JoinTriples(triples);
}

LlmReconstructor::LlmReconstructor(const CompletionClient& client,
                                   bool degrade_to_joiner)
    : client_(client), degrade_to_joiner_(degrade_to_joiner) {}

std::string LlmReconstructor::Reconstruct(
    std::span<const SemanticTriple> triples) const {
  const std::vector<ChatMessage> prompt = BuildPrompt(triples);
  try {
    return StripOutputPrefix(client_.Complete(prompt));
  } catch (const Error& e) {
    if (degrade_to_joiner_ && e.code() == ErrorCode::kCompletionFailed) {
      return JoinTriples(triples);
    }
    throw;
  }
}

std::string ReconstructDocument(std::span<const SemanticTriple> triples,
                                const Reconstructor& reconstructor) {
  if (triples.empty()) {
    throw Error(ErrorCode::kEmptyTripleList, "nothing to reconstruct");
  }
  return reconstructor.Reconstruct(triples);
}

}  // namespace dpst
