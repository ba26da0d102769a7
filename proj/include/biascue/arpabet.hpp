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

#ifndef BIASCUE_ARPABET_HPP_
#define BIASCUE_ARPABET_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace biascue {

// The 39-symbol English ARPAbet: 15 vowels followed by 24 consonants.
// Symbol ids index into this table; vowels occupy [0, kNumVowels).
inline constexpr int kNumVowels = 15;
inline constexpr int kNumArpabetSymbols = 39;

const char* arpabet_name(uint8_t id);

// Returns the symbol id for an ARPAbet base symbol ("EH", "SH"), or
// nullopt if the name is not in the table.
std::optional<uint8_t> arpabet_id(std::string_view base);

inline bool arpabet_is_vowel(uint8_t id) { return id < kNumVowels; }

// One phoneme: an ARPAbet base symbol plus an optional stress digit.
// Parsed lexicon entries always carry stress on vowels and never on
// consonants; stress-stripped derived forms use kNoStress everywhere.
class Phoneme {
 public:
  static constexpr int8_t kNoStress = -1;

  Phoneme(uint8_t id, int8_t stress) : id_(id), stress_(stress) {}

  // Parses "EH1", "SH", ... Returns nullopt for unknown symbols or a
  // stress digit outside {0,1,2}. Does not enforce the vowel/stress
  // pairing; the lexicon parser checks that.
  static std::optional<Phoneme> parse(std::string_view token);

  uint8_t id() const { return id_; }
  int8_t stress() const { return stress_; }
  bool has_stress() const { return stress_ != kNoStress; }
  bool is_vowel() const { return arpabet_is_vowel(id_); }

  Phoneme stripped() const { return Phoneme(id_, kNoStress); }
  std::string to_string() const;

  friend bool operator==(const Phoneme& a, const Phoneme& b) {
    return a.id_ == b.id_ && a.stress_ == b.stress_;
  }
  friend bool operator!=(const Phoneme& a, const Phoneme& b) {
    return !(a == b);
  }

 private:
  uint8_t id_;
  int8_t stress_;
};

// A non-empty phoneme sequence.
struct Pronunciation {
  std::vector<Phoneme> phonemes;

  bool empty() const { return phonemes.empty(); }
  std::size_t size() const { return phonemes.size(); }

  Pronunciation stripped() const;
  std::vector<uint8_t> base_ids() const;
  std::string to_string() const;  // "SH EH1 L IY0"

  friend bool operator==(const Pronunciation& a, const Pronunciation& b) {
    return a.phonemes == b.phonemes;
  }
};

}  // namespace biascue

#endif  // BIASCUE_ARPABET_HPP_
