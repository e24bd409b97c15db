//
// Copyright 2026 The foleval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "foleval/corpus.h"

#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "json.hpp"

namespace foleval {
namespace {

using json = nlohmann::ordered_json;

absl::Status SchemaError(size_t line, std::string_view field,
                         std::string_view problem) {
  return absl::InvalidArgumentError("line " + std::to_string(line) +
                                    ": schema-error: field '" +
                                    std::string(field) + "' " +
                                    std::string(problem));
}

const json* Field(const json& obj, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    auto it = obj.find(name);
    if (it != obj.end() && !it->is_null()) return &*it;
  }
  return nullptr;
}

// A string is split into lines (the FOLIO release joins premises that way).
absl::StatusOr<std::vector<std::string>> StringList(const json& v,
                                                    size_t line,
                                                    std::string_view field) {
  std::vector<std::string> out;
  if (v.is_string()) {
    std::istringstream in(v.get<std::string>());
    std::string item;
    while (std::getline(in, item)) {
      if (item.find_first_not_of(" \t\r") != std::string::npos) {
        out.push_back(item);
      }
    }
    return out;
  }
  if (!v.is_array()) return SchemaError(line, field, "must be a string list");
  for (const json& item : v) {
    if (!item.is_string()) {
      return SchemaError(line, field, "must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

absl::StatusOr<EvalRecord> ParseRecord(std::string_view json_line,
                                       size_t line_number) {
  json obj = json::parse(json_line, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded()) {
    return absl::InvalidArgumentError("line " + std::to_string(line_number) +
                                      ": schema-error: invalid JSON");
  }
  if (!obj.is_object()) {
    return absl::InvalidArgumentError("line " + std::to_string(line_number) +
                                      ": schema-error: not a JSON object");
  }
  EvalRecord r;

  if (const json* id = Field(obj, {"id", "example_id", "story_id"})) {
    r.id = id->is_string() ? id->get<std::string>() : id->dump();
  } else {
    r.id = "line-" + std::to_string(line_number);
  }

  const json* premises = Field(obj, {"fol_premises", "premises-FOL"});
  if (!premises) return SchemaError(line_number, "fol_premises", "is missing");
  auto fol_premises = StringList(*premises, line_number, "fol_premises");
  if (!fol_premises.ok()) return fol_premises.status();
  r.fol_premises = *std::move(fol_premises);
  if (r.fol_premises.empty()) {
    return SchemaError(line_number, "fol_premises", "is empty");
  }

  if (const json* nl = Field(obj, {"nl_premises", "premises"})) {
    auto nl_premises = StringList(*nl, line_number, "nl_premises");
    if (!nl_premises.ok()) return nl_premises.status();
    r.nl_premises = *std::move(nl_premises);
  }

  const json* query = Field(obj, {"fol_query", "conclusion-FOL"});
  if (!query) return SchemaError(line_number, "fol_query", "is missing");
  if (query->is_string()) {
    r.fol_query.push_back(query->get<std::string>());
  } else {
    auto list = StringList(*query, line_number, "fol_query");
    if (!list.ok()) return list.status();
    r.fol_query = *std::move(list);
  }
  if (r.fol_query.empty()) {
    return SchemaError(line_number, "fol_query", "is empty");
  }

  if (const json* nl = Field(obj, {"nl_query", "conclusion"})) {
    if (!nl->is_string()) {
      return SchemaError(line_number, "nl_query", "must be a string");
    }
    r.nl_query = nl->get<std::string>();
  }

  if (const json* gold = Field(obj, {"gold_fol_query"})) {
    if (!gold->is_string()) {
      return SchemaError(line_number, "gold_fol_query", "must be a string");
    }
    r.gold_fol_query = gold->get<std::string>();
  } else if (obj.contains("conclusion-FOL") && query->is_string()) {
    r.gold_fol_query = query->get<std::string>();
  }

  const json* label = Field(obj, {"gold_label", "label"});
  if (!label) return SchemaError(line_number, "gold_label", "is missing");
  std::optional<Label> parsed;
  if (label->is_string()) parsed = ParseLabel(label->get<std::string>());
  if (label->is_boolean()) {
    parsed = label->get<bool>() ? Label::kTrue : Label::kFalse;
  }
  if (!parsed || *parsed == Label::kCompileError) {
    return SchemaError(line_number, "gold_label",
                       "must be one of true, false, uncertain");
  }
  r.gold_label = *parsed;
  return r;
}

Corpus ReadCorpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  for (size_t n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto record = ParseRecord(line, n);
    if (record.ok()) {
      corpus.records.push_back(*std::move(record));
    } else {
      corpus.diagnostics.push_back({n, std::string(record.status().message())});
    }
  }
  return corpus;
}

absl::StatusOr<Corpus> LoadCorpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("io-error: cannot open " + path);
  Corpus corpus = ReadCorpus(in);
  if (in.bad()) return absl::DataLossError("io-error: cannot read " + path);
  return corpus;
}

std::string RecordToJson(const EvalRecord& r) {
  json obj;
  obj["id"] = r.id;
  if (!r.nl_premises.empty()) obj["nl_premises"] = r.nl_premises;
  obj["fol_premises"] = r.fol_premises;
  if (r.nl_query) obj["nl_query"] = *r.nl_query;
  if (r.fol_query.size() == 1) {
    obj["fol_query"] = r.fol_query[0];
  } else {
    obj["fol_query"] = r.fol_query;
  }
  if (r.gold_fol_query) obj["gold_fol_query"] = *r.gold_fol_query;
  obj["gold_label"] = std::string(LabelName(r.gold_label));
  return obj.dump();
}

}  // namespace foleval
