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

#include "dpst/record_io.h"

#include <string>

#include "dpst/error.h"
#include "dpst/vector_file.h"
#include "json_util.h"

namespace dpst {

using internal::Json;

std::vector<Document> ReadDocuments(const std::filesystem::path& path) {
  std::vector<Document> docs;
  internal::ForEachJsonLine(path, [&](const Json& j) {
    if (!j.contains("doc_id") || !j.contains("text")) {
      throw Error(ErrorCode::kFormatError,
                  "document record needs doc_id and text: " + j.dump());
    }
    const Json& id = j.at("doc_id");
    docs.push_back(Document{id.is_string() ? id.get<std::string>() : id.dump(),
                            j.at("text").get<std::string>()});
  });
  return docs;
}

void WriteDocuments(const std::filesystem::path& path,
                    const std::vector<Document>& docs) {
  std::string out;
  for (const auto& d : docs) {
    out += Json{{"doc_id", d.doc_id}, {"text", d.text}}.dump();
    out.push_back('\n');
  }
  internal::WriteWholeFile(path, out);
}

std::vector<SemanticTriple> ReadTripleList(const std::filesystem::path& path) {
  std::vector<SemanticTriple> triples;
  internal::ForEachJsonLine(path, [&](const Json& j) {
    triples.push_back(internal::TripleFromJson(j));
  });
  return triples;
}

void WriteTripleList(const std::filesystem::path& path,
                     const std::vector<SemanticTriple>& triples) {
  std::string out;
  for (const auto& t : triples) {
    out += internal::TripleToJson(t).dump();
    out.push_back('\n');
  }
  internal::WriteWholeFile(path, out);
}

std::string RecordToJsonLine(const PrivatizationRecord& record) {
  Json inputs = Json::array();
  for (const auto& t : record.inputs) inputs.push_back(internal::TripleToJson(t));
  Json outputs = Json::array();
  for (const auto& o : record.outputs) {
    Json j = internal::TripleToJson(o.triple);
    j["id"] = o.id;
    outputs.push_back(std::move(j));
  }
  Json j{
      {"doc_id", record.doc_id},
      {"fallback", record.fallback},
      {"epsilon_base", record.budget.base_epsilon},
      {"epsilon_doc", record.budget.document_epsilon},
      {"inputs", std::move(inputs)},
      {"clusters", record.neighborhoods},
      {"outputs", std::move(outputs)},
  };
  if (record.fallback) {
    j["epsilon_triple"] = nullptr;
    j["text"] = record.passthrough_text;
  } else {
    j["epsilon_triple"] = record.budget.per_triple_epsilon;
  }
  return j.dump();
}

PrivatizationRecord RecordFromJsonLine(const std::string& line) {
  PrivatizationRecord r;
  try {
    const Json j = Json::parse(line);
    r.doc_id = j.at("doc_id").get<std::string>();
    r.fallback = j.at("fallback").get<bool>();
    r.budget.base_epsilon = j.value("epsilon_base", 0.0);
    r.budget.document_epsilon = j.at("epsilon_doc").get<double>();
    if (!j.at("epsilon_triple").is_null()) {
      r.budget.per_triple_epsilon = j.at("epsilon_triple").get<double>();
    }
    for (const auto& t : j.at("inputs")) {
      r.inputs.push_back(internal::TripleFromJson(t));
    }
    r.budget.triple_count = r.fallback ? 0 : r.inputs.size();
    r.neighborhoods = j.at("clusters").get<std::vector<std::uint32_t>>();
    for (const auto& o : j.at("outputs")) {
      PublicTriple p;
      p.id = o.at("id").get<std::uint32_t>();
      p.triple = internal::TripleFromJson(o);
      r.outputs.push_back(std::move(p));
    }
    if (r.fallback) r.passthrough_text = j.at("text").get<std::string>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFormatError,
                std::string("bad privatization record: ") + e.what());
  }
  return r;
}

std::vector<PrivatizationRecord> ReadRecords(
    const std::filesystem::path& path) {
  std::vector<PrivatizationRecord> records;
  internal::ForEachJsonLine(path, [&](const Json& j) {
    records.push_back(RecordFromJsonLine(j.dump()));
  });
  return records;
}

}  // namespace dpst
