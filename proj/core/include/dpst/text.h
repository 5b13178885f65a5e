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

#ifndef DPST_TEXT_H_
#define DPST_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dpst {

// Strips leading and trailing ASCII whitespace.
std::string_view Trim(std::string_view s);

// Lowercased word tokens: maximal runs of ASCII letters/digits or non-ASCII
// bytes. Punctuation, including the `|` separator, never forms a token.
std::vector<std::string> LowercaseWordTokens(std::string_view text);

// Number of whitespace-separated tokens.
std::size_t CountWords(std::string_view text);

std::string ToLower(std::string_view s);

}  // namespace dpst

#endif  // DPST_TEXT_H_
