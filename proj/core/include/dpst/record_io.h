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

#ifndef DPST_RECORD_IO_H_
#define DPST_RECORD_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "dpst/privatizer.h"
#include "dpst/triples.h"

namespace dpst {

// Input document: newline-delimited {"doc_id": ..., "text": ...}.
struct Document {
  std::string doc_id;
  std::string text;
};

std::vector<Document> ReadDocuments(const std::filesystem::path& path);
void WriteDocuments(const std::filesystem::path& path,
                    const std::vector<Document>& docs);

// Triple list: newline-delimited {"s": ..., "p": ..., "o": ...}.
std::vector<SemanticTriple> ReadTripleList(const std::filesystem::path& path);
void WriteTripleList(const std::filesystem::path& path,
                     const std::vector<SemanticTriple>& triples);

// One JSON line:
//   {"doc_id", "fallback", "epsilon_base", "epsilon_doc", "epsilon_triple",
//    "inputs": [{"s","p","o"}...], "clusters": [...],
//    "outputs": [{"id","s","p","o"}...]}
// plus "text" holding the original text on fallback records.
// epsilon_triple is null on fallback records.
std::string RecordToJsonLine(const PrivatizationRecord& record);
PrivatizationRecord RecordFromJsonLine(const std::string& line);

std::vector<PrivatizationRecord> ReadRecords(
    const std::filesystem::path& path);

}  // namespace dpst

#endif  // DPST_RECORD_IO_H_
