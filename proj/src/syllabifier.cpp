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

#include "biascue/syllabifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "biascue/errors.hpp"
#include "biascue/text.hpp"

namespace biascue {

std::vector<Phoneme> Syllable::phonemes() const {
  std::vector<Phoneme> out;
  out.reserve(onset.size() + nucleus.size() + coda.size());
  out.insert(out.end(), onset.begin(), onset.end());
  out.insert(out.end(), nucleus.begin(), nucleus.end());
  out.insert(out.end(), coda.begin(), coda.end());
  return out;
}

namespace {

// Word-initial consonant clusters attested in English. Single
// consonants are added programmatically (all but NG).
const char* const kClusterOnsets[] = {
    "P R",  "T R",  "K R",  "B R",  "D R",  "G R",  "F R",  "TH R",
    "SH R", "P L",  "K L",  "B L",  "G L",  "F L",  "S L",  "T W",
    "K W",  "D W",  "S W",  "G W",  "TH W", "HH W", "S P",  "S T",
    "S K",  "S F",  "S M",  "S N",  "S V",  "P Y",  "B Y",  "T Y",
    "D Y",  "K Y",  "G Y",  "F Y",  "V Y",  "TH Y", "M Y",  "N Y",
    "HH Y", "L Y",  "S P L", "S P R", "S P Y", "S T R", "S T Y",
    "S K R", "S K W", "S K Y", "S K L",
};

}  // namespace

void OnsetTable::add(const std::vector<uint8_t>& ids) {
  onsets_.push_back(ids);
  max_length_ = std::max(max_length_, ids.size());
}

bool OnsetTable::is_legal_onset(const uint8_t* ids, std::size_t len) const {
  if (len == 0) return true;
  for (const auto& onset : onsets_) {
    if (onset.size() == len && std::equal(ids, ids + len, onset.begin())) return true;
  }
  return false;
}

OnsetTable OnsetTable::parse(std::string_view text) {
  OnsetTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields = split_whitespace(line);
    if (fields.empty()) continue;
    std::vector<uint8_t> ids;
    for (const std::string& f : fields) {
      auto id = arpabet_id(f);
      if (!id) throw MalformedLine(line_no, "unknown ARPAbet symbol '" + f + "'");
      ids.push_back(*id);
    }
    table.add(ids);
  }
  return table;
}

OnsetTable OnsetTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw Error("cannot open onset table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const OnsetTable& OnsetTable::english() {
  static const OnsetTable table = [] {
    OnsetTable t;
    auto ng = *arpabet_id("NG");
    for (uint8_t id = kNumVowels; id < kNumArpabetSymbols; ++id) {
      if (id != ng) t.add({id});
    }
    for (const char* cluster : kClusterOnsets) {
      std::vector<uint8_t> ids;
      for (const std::string& f : split_whitespace(cluster)) ids.push_back(*arpabet_id(f));
      t.add(ids);
    }
    return t;
  }();
  return table;
}

std::size_t count_vowels(const Pronunciation& p) {
  std::size_t n = 0;
  for (const Phoneme& ph : p.phonemes) n += ph.is_vowel() ? 1 : 0;
  return n;
}

std::vector<Syllable> syllabify(const Pronunciation& p, const OnsetTable& onsets) {
  const auto& ph = p.phonemes;
  std::vector<std::size_t> nuclei;
  for (std::size_t i = 0; i < ph.size(); ++i) {
    if (ph[i].is_vowel()) nuclei.push_back(i);
  }

  if (nuclei.empty()) {
    Syllable s;
    s.onset = ph;
    return {s};
  }

  std::vector<Syllable> out(nuclei.size());
  for (std::size_t k = 0; k < nuclei.size(); ++k) {
    out[k].nucleus = {ph[nuclei[k]]};
  }

  // Word-initial consonants always open the first syllable.
  out.front().onset.assign(ph.begin(), ph.begin() + static_cast<long>(nuclei.front()));
  // Word-final consonants always close the last one.
  out.back().coda.assign(ph.begin() + static_cast<long>(nuclei.back()) + 1, ph.end());

  // Intervocalic clusters: the longest legal suffix becomes the next
  // syllable's onset, the remainder the previous syllable's coda.
  for (std::size_t k = 0; k + 1 < nuclei.size(); ++k) {
    std::size_t lo = nuclei[k] + 1;
    std::size_t hi = nuclei[k + 1];  // exclusive
    std::size_t len = hi - lo;

    std::vector<uint8_t> ids(len);
    for (std::size_t i = 0; i < len; ++i) ids[i] = ph[lo + i].id();

    std::size_t take = std::min(len, onsets.max_length());
    while (take > 0 && !onsets.is_legal_onset(ids.data() + (len - take), take)) {
      --take;
    }

    std::size_t split = hi - take;
    out[k].coda.assign(ph.begin() + static_cast<long>(lo),
                       ph.begin() + static_cast<long>(split));
    out[k + 1].onset.assign(ph.begin() + static_cast<long>(split),
                            ph.begin() + static_cast<long>(hi));
  }
  return out;
}

std::vector<Phoneme> syllable_phonemes(const std::vector<Syllable>& syllables,
                                       std::size_t index, CodaMode mode) {
  const Syllable& s = syllables.at(index);
  bool with_coda = mode == CodaMode::kAlways ||
                   (mode == CodaMode::kAuto && index + 1 == syllables.size());
  std::vector<Phoneme> out;
  for (const Phoneme& ph : s.onset) out.push_back(ph.stripped());
  for (const Phoneme& ph : s.nucleus) out.push_back(ph.stripped());
  if (with_coda) {
    for (const Phoneme& ph : s.coda) out.push_back(ph.stripped());
  }
  return out;
}

std::vector<Phoneme> first_syllable_phonemes(const Pronunciation& p, CodaMode mode,
                                             const OnsetTable& onsets) {
  return syllable_phonemes(syllabify(p, onsets), 0, mode);
}

CodaMode parse_coda_mode(std::string_view name) {
  if (name == "auto") return CodaMode::kAuto;
  if (name == "always") return CodaMode::kAlways;
  if (name == "never") return CodaMode::kNever;
  throw Error("unknown first-syllable-coda mode: " + std::string(name));
}

}  // namespace biascue
