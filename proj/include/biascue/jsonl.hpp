// Copyright (c) 2026 biascue project contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIASCUE_JSONL_HPP_
#define BIASCUE_JSONL_HPP_

#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "biascue/biaslist.hpp"
#include "biascue/hints.hpp"
#include "biascue/metrics.hpp"

namespace biascue {

// JSON-lines file formats. One object per line:
//
//   utterance manifest  {"id","text","bias_words":[...]}
//   hint file           {"bias","strategy","hints":[...],"fallback","meta":[...]}
//   bias-list file      {"id","bias":[...],"relevant":n}
//   prompt file         {"id","prompt"}
//   tag file            {"id","text","tags"}
//   scoring pairs       {"id","text"} (or "ref"/"hyp" for the text key)

using Json = nlohmann::json;

// Parses one object per line; blank lines are skipped. Throws
// MalformedLine with the 1-based line number on invalid JSON.
std::vector<Json> read_jsonl(std::istream& in);
std::vector<Json> read_jsonl_file(const std::string& path);

Json hint_to_json(const HintEntry& entry);
HintEntry hint_from_json(const Json& j);
std::string hint_to_tsv(const HintEntry& entry);  // bias<TAB>h1 h2 ...

Json record_to_json(const UtteranceRecord& rec);
UtteranceRecord record_from_json(const Json& j);

Json bias_list_to_json(const std::string& id, const BiasList& list);
BiasList bias_list_from_json(const Json& j, std::string* id_out = nullptr);

// Rates appear as fractions; a rate whose denominator is zero is null.
Json report_to_json(const WerReport& report);
WerReport report_from_json(const Json& j);

}  // namespace biascue

#endif  // BIASCUE_JSONL_HPP_
