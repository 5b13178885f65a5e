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

#include "dpst/extractor.h"

#include <cctype>
#include <span>
#include <string>
#include <utility>

#include "dpst/error.h"
#include "dpst/text.h"
#include "json_util.h"

namespace dpst {
namespace {

constexpr std::string_view kVerbLexicon[] = {
    "am",     "is",      "are",     "was",     "were",    "be",
    "been",   "being",   "has",     "have",    "had",     "do",
    "does",   "did",     "can",     "could",   "will",    "would",
    "shall",  "should",  "may",     "might",   "must",    "get",
    "got",    "make",    "made",    "take",    "took",    "go",
    "went",   "see",     "saw",     "know",    "knew",    "think",
    "thought", "say",    "said",    "give",    "gave",    "find",
    "found",  "tell",    "told",    "become",  "became",  "leave",
    "left",   "feel",    "felt",    "bring",   "brought", "begin",
    "began",  "keep",    "kept",    "hold",    "held",    "write",
    "wrote",  "stand",   "stood",   "hear",    "heard",   "meet",
    "met",    "run",     "ran",     "pay",     "paid",    "lead",
    "led",    "grow",    "grew",    "lose",    "lost",    "send",
    "sent",   "build",   "built",   "buy",     "bought",  "win",
    "won",    "eat",     "ate",     "love",    "like",    "want",
    "need",   "use",     "own",     "help",    "enjoy",   "hate",
};

constexpr std::string_view kStopwords[] = {
    "the",   "a",      "an",     "and",     "or",     "but",    "of",
    "to",    "in",     "on",     "at",      "for",    "with",   "by",
    "from",  "as",     "that",   "this",    "these",  "those",  "so",
    "then",  "very",   "just",   "also",    "too",    "than",   "which",
    "who",   "whom",   "whose",  "what",    "when",   "where",  "while",
    "if",    "because", "although", "though", "there", "here",  "not",
    "really", "even",
};

bool Contains(std::span<const std::string_view> set, std::string_view word) {
  for (std::string_view w : set) {
    if (w == word) return true;
  }
  return false;
}

bool IsEdgePunct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u) != 0;
}

std::vector<std::string> SentenceTokens(std::string_view sentence) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() &&
           std::isspace(static_cast<unsigned char>(sentence[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < sentence.size() &&
           !std::isspace(static_cast<unsigned char>(sentence[j]))) {
      ++j;
    }
    std::string_view tok = sentence.substr(i, j - i);
    while (!tok.empty() && IsEdgePunct(tok.front())) tok.remove_prefix(1);
    while (!tok.empty() && IsEdgePunct(tok.back())) tok.remove_suffix(1);
    if (!tok.empty()) tokens.emplace_back(tok);
    i = j;
  }
  return tokens;
}

bool IsVerbCandidate(const std::string& token) {
  const std::string lower = ToLower(token);
  if (Contains(kVerbLexicon, lower)) return true;
  if (Contains(kStopwords, lower)) return false;
  if (lower.size() < 4) return false;
  if (std::isupper(static_cast<unsigned char>(token.front()))) return false;
  for (char c : lower) {
    if (!std::isalpha(static_cast<unsigned char>(c))) return false;
  }
  if (lower.ends_with("ed")) return true;
  return lower.ends_with("s") && !lower.ends_with("ss") &&
         !lower.ends_with("us") && !lower.ends_with("is");
}

// Joins tokens[begin, end) after dropping stopwords at either edge.
std::string TrimmedSpan(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end) {
  while (begin < end && Contains(kStopwords, ToLower(tokens[begin]))) ++begin;
  while (end > begin && Contains(kStopwords, ToLower(tokens[end - 1]))) --end;
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (!out.empty()) out.push_back(' ');
    out.append(tokens[i]);
  }
  return out;
}

}  // namespace

std::vector<SemanticTriple> HeuristicExtractor::ExtractSentence(
    std::string_view sentence) {
  const std::vector<std::string> tokens = SentenceTokens(sentence);
  if (tokens.size() < 3) return {};
  for (std::size_t v = 1; v + 1 < tokens.size(); ++v) {
    if (!IsVerbCandidate(tokens[v])) continue;
    std::string subject = TrimmedSpan(tokens, 0, v);
    std::string object = TrimmedSpan(tokens, v + 1, tokens.size());
    if (subject.empty() || object.empty()) continue;
    return {SemanticTriple{std::move(subject), tokens[v], std::move(object)}};
  }
  return {};
}

std::vector<SemanticTriple> HeuristicExtractor::Extract(
    std::string_view /*doc_id*/, std::string_view text) const {
  std::vector<SemanticTriple> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '.' || text[i] == '?' ||
        text[i] == '!') {
      for (auto& t : ExtractSentence(text.substr(start, i - start))) {
        out.push_back(std::move(t));
      }
      start = i + 1;
    }
  }
  return out;
}

ImportedExtractor::ImportedExtractor(
    std::map<std::string, std::vector<SemanticTriple>> records)
    : records_(records.begin(), records.end()) {}

ImportedExtractor ImportedExtractor::FromFile(
    const std::filesystem::path& path) {
  std::map<std::string, std::vector<SemanticTriple>> records;
  internal::ForEachJsonLine(path, [&](const internal::Json& j) {
    if (!j.contains("doc_id") || !j.contains("triples") ||
        !j.at("triples").is_array()) {
      throw Error(ErrorCode::kFormatError,
                  "extraction record needs doc_id and triples: " + j.dump());
    }
    std::vector<SemanticTriple> triples;
    for (const auto& t : j.at("triples")) {
      triples.push_back(internal::TripleFromJson(t));
    }
    records[j.at("doc_id").get<std::string>()] = std::move(triples);
  });
  return ImportedExtractor(std::move(records));
}

std::vector<SemanticTriple> ImportedExtractor::Extract(
    std::string_view doc_id, std::string_view /*text*/) const {
  const auto it = records_.find(doc_id);
  if (it == records_.end()) {
    throw Error(ErrorCode::kMissingExtraction,
                "no extraction for document '" + std::string(doc_id) + "'");
  }
  return it->second;
}

std::vector<SemanticTriple> ExtractTriples(std::string_view doc_id,
                                           std::string_view text,
                                           const ExtractorProvider& extractor) {
  if (Trim(text).empty()) return {};
  return extractor.Extract(doc_id, text);
}

}  // namespace dpst
