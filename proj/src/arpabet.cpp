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

#include "biascue/arpabet.hpp"

#include <array>

namespace biascue {

namespace {

// Vowels first (15), then consonants (24).
constexpr std::array<const char*, kNumArpabetSymbols> kSymbols = {
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY", "IH",
    "IY", "OW", "OY", "UH", "UW",
    "B",  "CH", "D",  "DH", "F",  "G",  "HH", "JH", "K",  "L",
    "M",  "N",  "NG", "P",  "R",  "S",  "SH", "T",  "TH", "V",
    "W",  "Y",  "Z",  "ZH"};

}  // namespace

const char* arpabet_name(uint8_t id) { return kSymbols[id]; }

std::optional<uint8_t> arpabet_id(std::string_view base) {
  for (int i = 0; i < kNumArpabetSymbols; ++i) {
    if (base == kSymbols[i]) return static_cast<uint8_t>(i);
  }
  return std::nullopt;
}

std::optional<Phoneme> Phoneme::parse(std::string_view token) {
  if (token.empty()) return std::nullopt;
  int8_t stress = kNoStress;
  char last = token.back();
  if (last >= '0' && last <= '9') {
    if (last > '2') return std::nullopt;
    stress = static_cast<int8_t>(last - '0');
    token.remove_suffix(1);
  }
  auto id = arpabet_id(token);
  if (!id) return std::nullopt;
  return Phoneme(*id, stress);
}

std::string Phoneme::to_string() const {
  std::string s = kSymbols[id_];
  if (stress_ != kNoStress) s.push_back(static_cast<char>('0' + stress_));
  return s;
}

Pronunciation Pronunciation::stripped() const {
  Pronunciation out;
  out.phonemes.reserve(phonemes.size());
  for (const Phoneme& p : phonemes) out.phonemes.push_back(p.stripped());
  return out;
}

std::vector<uint8_t> Pronunciation::base_ids() const {
  std::vector<uint8_t> out;
  out.reserve(phonemes.size());
  for (const Phoneme& p : phonemes) out.push_back(p.id());
  return out;
}

std::string Pronunciation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    if (i != 0) s.push_back(' ');
    s += phonemes[i].to_string();
  }
  return s;
}

}  // namespace biascue
