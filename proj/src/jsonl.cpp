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

#include "biascue/jsonl.hpp"

#include <fstream>

#include "biascue/errors.hpp"
#include "biascue/text.hpp"

namespace biascue {

std::vector<Json> read_jsonl(std::istream& in) {
  std::vector<Json> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) throw MalformedLine(line_no, "invalid JSON");
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<Json> read_jsonl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw Error("cannot open " + path);
  return read_jsonl(in);
}

Json hint_to_json(const HintEntry& entry) {
  Json meta = Json::array();
  for (const HintWordMeta& m : entry.meta) {
    Json item;
    if (m.syllable >= 0) item["syll"] = m.syllable;
    if (m.span_begin >= 0) item["span"] = {m.span_begin, m.span_len};
    item["ced"] = m.ced;
    if (m.ped) item["ped"] = *m.ped;
    meta.push_back(std::move(item));
  }
  return Json{{"bias", entry.bias_word},
              {"strategy", strategy_name(entry.strategy)},
              {"hints", entry.hint_words},
              {"fallback", entry.fallback_used},
              {"meta", std::move(meta)}};
}

HintEntry hint_from_json(const Json& j) {
  HintEntry entry;
  entry.bias_word = j.at("bias").get<std::string>();
  entry.strategy = parse_strategy(j.at("strategy").get<std::string>());
  entry.hint_words = j.at("hints").get<std::vector<std::string>>();
  entry.fallback_used = j.at("fallback").get<bool>();
  for (const Json& item : j.at("meta")) {
    HintWordMeta m;
    if (item.contains("syll")) m.syllable = item["syll"].get<int>();
    if (item.contains("span")) {
      m.span_begin = item["span"][0].get<int>();
      m.span_len = item["span"][1].get<int>();
    }
    m.ced = item.at("ced").get<int>();
    if (item.contains("ped")) m.ped = item["ped"].get<int>();
    entry.meta.push_back(m);
  }
  return entry;
}

std::string hint_to_tsv(const HintEntry& entry) {
  return entry.bias_word + "\t" + join(entry.hint_words, " ");
}

Json record_to_json(const UtteranceRecord& rec) {
  return Json{{"id", rec.id}, {"text", rec.text}, {"bias_words", rec.bias_words}};
}

UtteranceRecord record_from_json(const Json& j) {
  UtteranceRecord rec;
  rec.id = j.at("id").get<std::string>();
  rec.text = j.at("text").get<std::string>();
  if (j.contains("bias_words")) {
    rec.bias_words = j["bias_words"].get<std::vector<std::string>>();
  }
  return rec;
}

Json bias_list_to_json(const std::string& id, const BiasList& list) {
  return Json{{"id", id}, {"bias", list.words}, {"relevant", list.relevant_count}};
}

BiasList bias_list_from_json(const Json& j, std::string* id_out) {
  if (id_out != nullptr) *id_out = j.at("id").get<std::string>();
  BiasList list;
  list.words = j.at("bias").get<std::vector<std::string>>();
  list.relevant_count = j.value("relevant", std::size_t{0});
  return list;
}

Json report_to_json(const WerReport& report) {
  Json j;
  j["counts"] = {{"b_err", report.b_err},   {"b_ref", report.b_ref},
                 {"u_err", report.u_err},   {"u_ref", report.u_ref},
                 {"total_err", report.total_err()}, {"total_ref", report.total_ref()}};
  j["b_wer"] = report.b_ref > 0 ? Json(report.b_wer()) : Json(nullptr);
  j["u_wer"] = report.u_ref > 0 ? Json(report.u_wer()) : Json(nullptr);
  j["wer"] = report.total_ref() > 0 ? Json(report.wer()) : Json(nullptr);
  return j;
}

WerReport report_from_json(const Json& j) {
  WerReport report;
  const Json& c = j.at("counts");
  report.b_err = c.at("b_err").get<std::size_t>();
  report.b_ref = c.at("b_ref").get<std::size_t>();
  report.u_err = c.at("u_err").get<std::size_t>();
  report.u_ref = c.at("u_ref").get<std::size_t>();
  return report;
}

}  // namespace biascue
