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

#ifndef DPST_TRIPLES_H_
#define DPST_TRIPLES_H_

#include <compare>
#include <string>
#include <string_view>

namespace dpst {

// Subject-predicate-object unit. Fields are trimmed and non-empty once
// constructed through ParseTriple or MakeTriple.
struct SemanticTriple {
  std::string subject;
  std::string predicate;
  std::string object;

  friend auto operator<=>(const SemanticTriple&,
                          const SemanticTriple&) = default;
};

inline constexpr std::string_view kTripleSeparator = " | ";

// Validates and trims the fields. Throws MalformedTriple if any field is
// empty after trimming.
SemanticTriple MakeTriple(std::string_view subject, std::string_view predicate,
                          std::string_view object);

// Parses "subject | predicate | object". Throws MalformedTriple unless the
// line splits into exactly three non-empty fields.
SemanticTriple ParseTriple(std::string_view line);

std::string FormatTriple(const SemanticTriple& triple);

}  // namespace dpst

#endif  // DPST_TRIPLES_H_
