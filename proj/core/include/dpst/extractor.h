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

#ifndef DPST_EXTRACTOR_H_
#define DPST_EXTRACTOR_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dpst/triples.h"

namespace dpst {

// Source of semantic triples for a document. Implementations must be
// deterministic and safe to call concurrently.
class ExtractorProvider {
 public:
  virtual ~ExtractorProvider() = default;

  virtual std::vector<SemanticTriple> Extract(std::string_view doc_id,
                                              std::string_view text) const = 0;
};

// Rule-based stand-in for an open information extractor.
//
// Sentences are split on `.`, `?` and `!`. Within a sentence the first token
// (excluding the first and last positions) that is either in a closed verb
// lexicon or looks like an inflected verb (lowercase, at least four letters,
// ending in "ed" or a single "s") is taken as the predicate. The subject is
// the token span before it and the object the span after it, each trimmed of
// leading and trailing stopwords. Sentences with no usable split are skipped.
class HeuristicExtractor final : public ExtractorProvider {
 public:
  std::vector<SemanticTriple> Extract(std::string_view doc_id,
                                      std::string_view text) const override;

  // Returns at most one triple.
  static std::vector<SemanticTriple> ExtractSentence(std::string_view sentence);
};

// Returns externally produced extractions verbatim, keyed by document ID.
class ImportedExtractor final : public ExtractorProvider {
 public:
  explicit ImportedExtractor(
      std::map<std::string, std::vector<SemanticTriple>> records);

  // Reads newline-delimited {"doc_id": ..., "triples": [{"s","p","o"}...]}.
  static ImportedExtractor FromFile(const std::filesystem::path& path);

  // Throws MissingExtraction for an unknown document ID.
  std::vector<SemanticTriple> Extract(std::string_view doc_id,
                                      std::string_view text) const override;

  std::size_t size() const { return records_.size(); }

 private:
  std::map<std::string, std::vector<SemanticTriple>, std::less<>> records_;
};

// Empty or all-whitespace documents yield no triples without consulting the
// extractor.
std::vector<SemanticTriple> ExtractTriples(std::string_view doc_id,
                                           std::string_view text,
                                           const ExtractorProvider& extractor);

}  // namespace dpst

#endif  // DPST_EXTRACTOR_H_
