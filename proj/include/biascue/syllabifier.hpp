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

#ifndef BIASCUE_SYLLABIFIER_HPP_
#define BIASCUE_SYLLABIFIER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "biascue/arpabet.hpp"

namespace biascue {

// Onset / nucleus / coda decomposition of one syllable. A vowel-free
// pronunciation yields a single degenerate syllable: no nucleus, all
// phonemes in the onset.
struct Syllable {
  std::vector<Phoneme> onset;
  std::vector<Phoneme> nucleus;  // exactly one vowel, or empty when degenerate
  std::vector<Phoneme> coda;

  bool degenerate() const { return nucleus.empty(); }
  std::vector<Phoneme> phonemes() const;  // onset + nucleus + coda
};

// Table of phoneme clusters that may legally start an English syllable.
// Used by maximal-onset syllabification: intervocalic consonants go to
// the following onset as long as the cluster stays in this table, the
// rest fall back to the preceding coda.
class OnsetTable {
 public:
  // Built-in English onsets: every single consonant except NG, plus the
  // usual two- and three-consonant clusters (ST, STR, PL, ...).
  static const OnsetTable& english();

  // Override table for testing: one onset per line, phonemes separated
  // by spaces ("S T R"). Throws MalformedLine on unknown symbols.
  static OnsetTable parse(std::string_view text);
  static OnsetTable load(const std::string& path);

  bool is_legal_onset(const uint8_t* ids, std::size_t len) const;
  std::size_t max_length() const { return max_length_; }

 private:
  void add(const std::vector<uint8_t>& ids);
  std::vector<std::vector<uint8_t>> onsets_;
  std::size_t max_length_ = 0;
};

// Maximal-onset syllabification. The returned syllables concatenate
// back to p exactly (stress included); the number of non-degenerate
// syllables equals the vowel count of p.
std::vector<Syllable> syllabify(const Pronunciation& p,
                                const OnsetTable& onsets = OnsetTable::english());

// How first-syllable phoneme sequences treat the coda when words are
// compared syllable-by-syllable:
//   kAuto   - coda included only when the syllable is word-final (so a
//             monosyllable contributes its whole phoneme sequence, and
//             non-final syllables compare onset+nucleus only),
//   kAlways - coda always included,
//   kNever  - coda never included.
enum class CodaMode { kAuto, kAlways, kNever };

// Stress-stripped phonemes of syllables[index] under the given mode.
std::vector<Phoneme> syllable_phonemes(const std::vector<Syllable>& syllables,
                                       std::size_t index,
                                       CodaMode mode = CodaMode::kAuto);

// Stress-stripped phonemes of the first syllable of p.
std::vector<Phoneme> first_syllable_phonemes(
    const Pronunciation& p, CodaMode mode = CodaMode::kAuto,
    const OnsetTable& onsets = OnsetTable::english());

std::size_t count_vowels(const Pronunciation& p);

CodaMode parse_coda_mode(std::string_view name);  // "auto" | "always" | "never"

}  // namespace biascue

#endif  // BIASCUE_SYLLABIFIER_HPP_
