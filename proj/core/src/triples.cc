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

#include "dpst/triples.h"

#include <string>
#include <vector>

#include "dpst/error.h"
#include "dpst/text.h"

namespace dpst {

SemanticTriple MakeTriple(std::string_view subject, std::string_view predicate,
                          std::string_view object) {
  SemanticTriple t{std::string(Trim(subject)), std::string(Trim(predicate)),
                   std::string(Trim(object))};
  if (t.subject.empty() || t.predicate.empty() || t.object.empty()) {
    throw Error(ErrorCode::kMalformedTriple,
                "empty field in triple '" + std::string(subject) + "', '" +
                    std::string(predicate) + "', '" + std::string(object) +
                    "'");
  }
  return t;
}

SemanticTriple ParseTriple(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    // Bare '|' also splits; MakeTriple trims the pieces.
    const std::size_t pos = line.find('|', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  if (fields.size() != 3) {
    throw Error(ErrorCode::kMalformedTriple,
                "expected 3 fields, got " + std::to_string(fields.size()) +
                    " in '" + std::string(line) + "'");
  }
  return MakeTriple(fields[0], fields[1], fields[2]);
}

std::string FormatTriple(const SemanticTriple& triple) {
  std::string out;
  out.reserve(triple.subject.size() + triple.predicate.size() +
              triple.object.size() + 2 * kTripleSeparator.size());
  out.append(triple.subject)
      .append(kTripleSeparator)
      .append(triple.predicate)
      .append(kTripleSeparator)
      .append(triple.object);
  return out;
}

}  // namespace dpst
