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

#ifndef BIASCUE_HINTS_HPP_
#define BIASCUE_HINTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biascue/lexicon.hpp"
#include "biascue/rng.hpp"
#include "biascue/syllabifier.hpp"

namespace biascue {

// Pronunciation-cue generation: each bias word is paired with common
// words whose pronunciation partially matches it, under one of three
// strategies.
//
//   Syllable - one hint word per syllable of the bias word; the hint
//              word's first syllable matches that syllable.
//   Vowel    - hint words whose concatenated vowel sequences equal the
//              bias word's vowel sequence exactly.
//   CedPed   - the single common word at minimum character-level edit
//              distance from the bias word.
//
// Vowel-free bias words cannot use the syllable or vowel strategies and
// fall back to CedPed with fallback_used set.

enum class HintStrategy { kSyllable, kVowel, kCedPed };

const char* strategy_name(HintStrategy s);            // "syllable" | "vowel" | "ced_ped"
HintStrategy parse_strategy(std::string_view name);   // accepts "syl", "vow", "ced-ped" too

enum class PolicyKind { kMinCed, kMinCedThenMinPed, kSeededRandom };

// How one hint word is chosen from a candidate set. Deterministic
// policies break ties lexicographically; SeededRandom draws uniformly
// and equal (seed, candidate set) pairs always give the same choice.
struct SelectionPolicy {
  PolicyKind kind = PolicyKind::kMinCed;
  uint64_t seed = 0;  // used by kSeededRandom only

  static SelectionPolicy min_ced() { return {PolicyKind::kMinCed, 0}; }
  static SelectionPolicy min_ced_then_min_ped() {
    return {PolicyKind::kMinCedThenMinPed, 0};
  }
  static SelectionPolicy seeded_random(uint64_t seed) {
    return {PolicyKind::kSeededRandom, seed};
  }
};

SelectionPolicy parse_policy(std::string_view name, uint64_t seed);

// Per-hint-word record: which syllable it matched or which vowel span
// it covers, plus its distances to the bias word.
struct HintWordMeta {
  int syllable = -1;    // Syllable strategy: 0-based syllable index
  int span_begin = -1;  // Vowel strategy: first covered vowel position
  int span_len = 0;     // Vowel strategy: number of vowels covered
  int ced = 0;
  std::optional<int> ped;  // present when both pronunciations are known

  friend bool operator==(const HintWordMeta&, const HintWordMeta&) = default;
};

struct HintEntry {
  std::string bias_word;  // case-folded
  HintStrategy strategy = HintStrategy::kCedPed;
  std::vector<std::string> hint_words;
  std::vector<HintWordMeta> meta;  // parallel to hint_words
  bool fallback_used = false;

  friend bool operator==(const HintEntry&, const HintEntry&) = default;
};

// Precomputes per-common-word phonetics (primary pronunciation, first
// syllable, vowel sequence) once, so batch generation over large common
// lists stays linear per bias word.
class HintGenerator {
 public:
  HintGenerator(const Lexicon& lex, const CommonWordList& common,
                CodaMode coda_mode = CodaMode::kAuto,
                const OnsetTable& onsets = OnsetTable::english());

  // One hint word per syllable. Candidates must match the syllable's
  // stress-stripped phonemes exactly; empty tiers relax to PED <= 1,
  // then PED <= 2, setting fallback_used. Throws NoPronunciation when
  // the bias word is unlookupable and no pronunciation is supplied,
  // NoCandidate(m) when a syllable stays uncovered after relaxation.
  HintEntry syllable_hints(std::string_view bias_word, const SelectionPolicy& policy,
                           const Pronunciation* pron = nullptr) const;

  // Exact whole-sequence vowel match when available (one hint word),
  // otherwise a greedy longest-prefix cover of the vowel sequence.
  // Throws CoverFailure when some vowel cannot be covered.
  HintEntry vowel_hints(std::string_view bias_word, const SelectionPolicy& policy,
                        const Pronunciation* pron = nullptr) const;

  // The common word with the smallest CED to the bias word. PED breaks
  // CED ties under kMinCedThenMinPed; unlookupable candidates rank
  // after lookupable ones.
  HintEntry ced_ped_hint(std::string_view bias_word, const SelectionPolicy& policy,
                         const Pronunciation* pron = nullptr) const;

  HintEntry generate(std::string_view bias_word, HintStrategy strategy,
                     const SelectionPolicy& policy,
                     const Pronunciation* pron = nullptr) const;

 private:
  struct CommonEntry {
    std::string word;
    const Pronunciation* pron = nullptr;   // primary, nullptr if unlookupable
    std::vector<uint8_t> first_syllable;   // stress-stripped ids, empty if degenerate
    std::vector<uint8_t> vowels;           // stress-stripped vowel ids
    bool degenerate = true;
  };

  const CommonEntry& select(const std::vector<const CommonEntry*>& candidates,
                            std::string_view bias_word, const Pronunciation* bias_pron,
                            const SelectionPolicy& policy, SplitMix64& rng) const;
  HintWordMeta make_meta(const CommonEntry& pick, std::string_view bias_word,
                         const Pronunciation* bias_pron) const;
  const Pronunciation* resolve_pron(std::string_view folded_word,
                                    const Pronunciation* supplied) const;

  const Lexicon& lex_;
  CodaMode coda_mode_;
  std::vector<CommonEntry> common_;
};

// Convenience wrappers matching the per-word operations. Each builds a
// fresh HintGenerator; prefer the class for repeated calls.
HintEntry syllable_hints(std::string_view bias_word, const Lexicon& lex,
                         const CommonWordList& common, const SelectionPolicy& policy,
                         const Pronunciation* pron = nullptr,
                         CodaMode coda_mode = CodaMode::kAuto);
HintEntry vowel_hints(std::string_view bias_word, const Lexicon& lex,
                      const CommonWordList& common, const SelectionPolicy& policy,
                      const Pronunciation* pron = nullptr);
HintEntry ced_ped_hint(std::string_view bias_word, const Lexicon& lex,
                       const CommonWordList& common, const SelectionPolicy& policy,
                       const Pronunciation* pron = nullptr);

// Batch driver. Output order equals input order; per-word failures are
// collected, not fatal. Bias words that a syllable/vowel strategy
// cannot handle (no lexicon entry) are routed to CedPed with
// fallback_used set. SeededRandom seeds are derived per word as
// seed ^ stable_hash(word), so any processing order agrees.
struct HintOutcome {
  std::string bias_word;
  std::optional<HintEntry> entry;
  std::string error;  // non-empty iff entry is absent
};

std::vector<HintOutcome> generate_hints(const std::vector<std::string>& bias_words,
                                        HintStrategy strategy, const Lexicon& lex,
                                        const CommonWordList& common,
                                        const SelectionPolicy& policy,
                                        CodaMode coda_mode = CodaMode::kAuto);

}  // namespace biascue

#endif  // BIASCUE_HINTS_HPP_
