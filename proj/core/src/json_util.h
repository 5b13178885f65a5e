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

#ifndef DPST_SRC_JSON_UTIL_H_
#define DPST_SRC_JSON_UTIL_H_

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "dpst/error.h"
#include "dpst/triples.h"
#include "json.hpp"

namespace dpst::internal {

using Json = nlohmann::json;

inline Json TripleToJson(const SemanticTriple& t) {
  return Json{{"s", t.subject}, {"p", t.predicate}, {"o", t.object}};
}

inline SemanticTriple TripleFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("p") ||
      !j.contains("o")) {
    throw Error(ErrorCode::kMalformedTriple,
                "triple record needs s/p/o: " + j.dump());
  }
  return MakeTriple(j.at("s").get<std::string>(), j.at("p").get<std::string>(),
                    j.at("o").get<std::string>());
}

// Calls `fn` with each parsed non-blank line of a JSON-lines file.
inline void ForEachJsonLine(const std::filesystem::path& path,
                            const std::function<void(const Json&)>& fn) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::kFormatError, path.string() + ":" +
                                               std::to_string(line_no) + ": " +
                                               e.what());
    }
    fn(j);
  }
}

}  // namespace dpst::internal

#endif  // DPST_SRC_JSON_UTIL_H_
