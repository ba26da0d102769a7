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

#include "biascue/hints.hpp"

#include <algorithm>
#include <limits>

#include "biascue/distance.hpp"
#include "biascue/errors.hpp"
#include "biascue/text.hpp"

namespace biascue {

namespace {

std::vector<uint8_t> base_ids(const std::vector<Phoneme>& phonemes) {
  std::vector<uint8_t> ids;
  ids.reserve(phonemes.size());
  for (const Phoneme& p : phonemes) ids.push_back(p.id());
  return ids;
}

int id_ped(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  return levenshtein(std::span<const uint8_t>(a), std::span<const uint8_t>(b));
}

bool is_prefix(const std::vector<uint8_t>& prefix, const std::vector<uint8_t>& seq,
               std::size_t from) {
  if (prefix.empty() || prefix.size() > seq.size() - from) return false;
  return std::equal(prefix.begin(), prefix.end(), seq.begin() + static_cast<long>(from));
}

}  // namespace

const char* strategy_name(HintStrategy s) {
  switch (s) {
    case HintStrategy::kSyllable:
      return "syllable";
    case HintStrategy::kVowel:
      return "vowel";
    case HintStrategy::kCedPed:
      return "ced_ped";
  }
  return "ced_ped";
}

HintStrategy parse_strategy(std::string_view name) {
  if (name == "syllable" || name == "syl") return HintStrategy::kSyllable;
  if (name == "vowel" || name == "vow") return HintStrategy::kVowel;
  if (name == "ced_ped" || name == "ced-ped" || name == "cedped")
    return HintStrategy::kCedPed;
  throw Error("unknown hint strategy: " + std::string(name));
}

SelectionPolicy parse_policy(std::string_view name, uint64_t seed) {
  if (name == "min-ced" || name == "min_ced") return SelectionPolicy::min_ced();
  if (name == "min-ced-ped" || name == "min_ced_ped")
    return SelectionPolicy::min_ced_then_min_ped();
  if (name == "random") return SelectionPolicy::seeded_random(seed);
  throw Error("unknown selection policy: " + std::string(name));
}

HintGenerator::HintGenerator(const Lexicon& lex, const CommonWordList& common,
                             CodaMode coda_mode, const OnsetTable& onsets)
    : lex_(lex), coda_mode_(coda_mode) {
  common_.reserve(common.size());
  for (const std::string& word : common.words()) {
    CommonEntry entry;
    entry.word = word;
    entry.pron = lex.primary(word);
    if (entry.pron != nullptr) {
      std::vector<Syllable> syllables = syllabify(*entry.pron, onsets);
      entry.degenerate = syllables.front().degenerate();
      if (!entry.degenerate) {
        entry.first_syllable = base_ids(syllable_phonemes(syllables, 0, coda_mode));
        entry.vowels = base_ids(vowel_sequence(*entry.pron));
      }
    }
    common_.push_back(std::move(entry));
  }
}

const Pronunciation* HintGenerator::resolve_pron(std::string_view folded_word,
                                                 const Pronunciation* supplied) const {
  if (supplied != nullptr) return supplied;
  return lex_.primary(folded_word);
}

HintWordMeta HintGenerator::make_meta(const CommonEntry& pick, std::string_view bias_word,
                                      const Pronunciation* bias_pron) const {
  HintWordMeta meta;
  meta.ced = ced(pick.word, bias_word);
  if (pick.pron != nullptr && bias_pron != nullptr) {
    meta.ped = ped(*pick.pron, *bias_pron);
  }
  return meta;
}

const HintGenerator::CommonEntry& HintGenerator::select(
    const std::vector<const CommonEntry*>& candidates, std::string_view bias_word,
    const Pronunciation* bias_pron, const SelectionPolicy& policy,
    SplitMix64& rng) const {
  // Sort by word so the choice depends on the candidate set, not on the
  // order candidates were collected in.
  std::vector<const CommonEntry*> sorted = candidates;
  std::sort(sorted.begin(), sorted.end(),
            [](const CommonEntry* a, const CommonEntry* b) { return a->word < b->word; });

  if (policy.kind == PolicyKind::kSeededRandom) {
    return *sorted[rng.below(sorted.size())];
  }

  std::vector<int> ceds(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ceds[i] = ced(sorted[i]->word, bias_word);
  }
  int best_ced = *std::min_element(ceds.begin(), ceds.end());

  std::vector<const CommonEntry*> tied;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (ceds[i] == best_ced) tied.push_back(sorted[i]);
  }
  if (tied.size() == 1 || policy.kind == PolicyKind::kMinCed) {
    return *tied.front();  // sorted, so the lexicographically smallest
  }

  // kMinCedThenMinPed: PED against the bias pronunciation orders the
  // tied set; unlookupable candidates rank after all lookupable ones.
  bool any_lookupable = std::any_of(tied.begin(), tied.end(),
                                    [](const CommonEntry* e) { return e->pron != nullptr; });
  if (bias_pron == nullptr) {
    if (any_lookupable) throw NoPronunciation(std::string(bias_word));
    return *tied.front();
  }
  const CommonEntry* best = nullptr;
  int best_ped = std::numeric_limits<int>::max();
  for (const CommonEntry* e : tied) {
    int p = e->pron != nullptr ? ped(*e->pron, *bias_pron)
                               : std::numeric_limits<int>::max();
    if (best == nullptr || p < best_ped) {
      best = e;
      best_ped = p;
    }
  }
  return *best;
}

HintEntry HintGenerator::syllable_hints(std::string_view bias_word,
                                        const SelectionPolicy& policy,
                                        const Pronunciation* pron) const {
  std::string bias = fold_case(bias_word);
  const Pronunciation* bias_pron = resolve_pron(bias, pron);
  if (bias_pron == nullptr) throw NoPronunciation(bias);

  std::vector<Syllable> syllables = syllabify(*bias_pron);
  if (syllables.front().degenerate()) {
    HintEntry entry = ced_ped_hint(bias, policy, bias_pron);
    entry.fallback_used = true;
    return entry;
  }

  HintEntry entry;
  entry.bias_word = bias;
  entry.strategy = HintStrategy::kSyllable;

  SplitMix64 rng(policy.seed);
  for (std::size_t m = 0; m < syllables.size(); ++m) {
    std::vector<uint8_t> target = base_ids(syllable_phonemes(syllables, m, coda_mode_));

    std::vector<const CommonEntry*> candidates;
    bool relaxed = false;
    for (int max_ped : {0, 1, 2}) {
      for (const CommonEntry& e : common_) {
        if (e.pron == nullptr || e.degenerate || e.word == bias) continue;
        bool ok = max_ped == 0 ? e.first_syllable == target
                               : id_ped(e.first_syllable, target) <= max_ped;
        if (ok) candidates.push_back(&e);
      }
      if (!candidates.empty()) {
        relaxed = max_ped > 0;
        break;
      }
    }
    if (candidates.empty()) {
      throw NoCandidate(static_cast<int>(m),
                        "no candidate for syllable " + std::to_string(m) + " of '" +
                            bias + "' after PED <= 2 relaxation");
    }
    entry.fallback_used = entry.fallback_used || relaxed;

    const CommonEntry& pick = select(candidates, bias, bias_pron, policy, rng);
    HintWordMeta meta = make_meta(pick, bias, bias_pron);
    meta.syllable = static_cast<int>(m);
    entry.hint_words.push_back(pick.word);
    entry.meta.push_back(meta);
  }
  return entry;
}

HintEntry HintGenerator::vowel_hints(std::string_view bias_word,
                                     const SelectionPolicy& policy,
                                     const Pronunciation* pron) const {
  std::string bias = fold_case(bias_word);
  const Pronunciation* bias_pron = resolve_pron(bias, pron);
  if (bias_pron == nullptr) throw NoPronunciation(bias);

  std::vector<uint8_t> target = base_ids(vowel_sequence(*bias_pron));
  if (target.empty()) {
    HintEntry entry = ced_ped_hint(bias, policy, bias_pron);
    entry.fallback_used = true;
    return entry;
  }

  HintEntry entry;
  entry.bias_word = bias;
  entry.strategy = HintStrategy::kVowel;
  SplitMix64 rng(policy.seed);

  // One word with the exact vowel sequence, when available.
  std::vector<const CommonEntry*> exact;
  for (const CommonEntry& e : common_) {
    if (e.pron == nullptr || e.word == bias) continue;
    if (e.vowels == target) exact.push_back(&e);
  }
  if (!exact.empty()) {
    const CommonEntry& pick = select(exact, bias, bias_pron, policy, rng);
    HintWordMeta meta = make_meta(pick, bias, bias_pron);
    meta.span_begin = 0;
    meta.span_len = static_cast<int>(target.size());
    entry.hint_words.push_back(pick.word);
    entry.meta.push_back(meta);
    return entry;
  }

  // Greedy cover: longest vowel prefix first, selection policy within
  // the longest-prefix set.
  std::size_t pos = 0;
  while (pos < target.size()) {
    std::size_t best_len = 0;
    std::vector<const CommonEntry*> candidates;
    for (const CommonEntry& e : common_) {
      if (e.pron == nullptr || e.word == bias || e.vowels.empty()) continue;
      if (!is_prefix(e.vowels, target, pos)) continue;
      if (e.vowels.size() > best_len) {
        best_len = e.vowels.size();
        candidates.clear();
      }
      if (e.vowels.size() == best_len) candidates.push_back(&e);
    }
    if (candidates.empty()) {
      throw CoverFailure("no common word covers vowel " + std::to_string(pos) +
                         " (" + std::string(arpabet_name(target[pos])) + ") of '" +
                         bias + "'");
    }
    const CommonEntry& pick = select(candidates, bias, bias_pron, policy, rng);
    HintWordMeta meta = make_meta(pick, bias, bias_pron);
    meta.span_begin = static_cast<int>(pos);
    meta.span_len = static_cast<int>(best_len);
    entry.hint_words.push_back(pick.word);
    entry.meta.push_back(meta);
    pos += best_len;
  }
  return entry;
}

HintEntry HintGenerator::ced_ped_hint(std::string_view bias_word,
                                      const SelectionPolicy& policy,
                                      const Pronunciation* pron) const {
  std::string bias = fold_case(bias_word);
  if (common_.empty()) throw NoCandidate(-1, "common word list is empty");

  int best_ced = std::numeric_limits<int>::max();
  std::vector<const CommonEntry*> tied;
  for (const CommonEntry& e : common_) {
    if (e.word == bias) continue;
    int c = ced(e.word, bias);
    if (c < best_ced) {
      best_ced = c;
      tied.clear();
    }
    if (c == best_ced) tied.push_back(&e);
  }
  if (tied.empty()) throw NoCandidate(-1, "no candidate distinct from '" + bias + "'");

  const CommonEntry* pick;
  SplitMix64 rng(policy.seed);
  if (tied.size() == 1) {
    pick = tied.front();
  } else {
    std::sort(tied.begin(), tied.end(),
              [](const CommonEntry* a, const CommonEntry* b) { return a->word < b->word; });
    switch (policy.kind) {
      case PolicyKind::kMinCed:
        pick = tied.front();
        break;
      case PolicyKind::kSeededRandom:
        pick = tied[rng.below(tied.size())];
        break;
      case PolicyKind::kMinCedThenMinPed: {
        const Pronunciation* bias_pron = resolve_pron(bias, pron);
        bool any_lookupable = std::any_of(
            tied.begin(), tied.end(),
            [](const CommonEntry* e) { return e->pron != nullptr; });
        if (bias_pron == nullptr && any_lookupable) throw NoPronunciation(bias);
        pick = tied.front();
        int best_ped = std::numeric_limits<int>::max();
        for (const CommonEntry* e : tied) {
          int p = (e->pron != nullptr && bias_pron != nullptr)
                      ? ped(*e->pron, *bias_pron)
                      : std::numeric_limits<int>::max();
          if (p < best_ped) {
            best_ped = p;
            pick = e;
          }
        }
        break;
      }
      default:
        pick = tied.front();
        break;
    }
  }

  HintEntry entry;
  entry.bias_word = bias;
  entry.strategy = HintStrategy::kCedPed;
  entry.hint_words.push_back(pick->word);
  entry.meta.push_back(make_meta(*pick, bias, resolve_pron(bias, pron)));
  return entry;
}

HintEntry HintGenerator::generate(std::string_view bias_word, HintStrategy strategy,
                                  const SelectionPolicy& policy,
                                  const Pronunciation* pron) const {
  switch (strategy) {
    case HintStrategy::kSyllable:
      return syllable_hints(bias_word, policy, pron);
    case HintStrategy::kVowel:
      return vowel_hints(bias_word, policy, pron);
    case HintStrategy::kCedPed:
      return ced_ped_hint(bias_word, policy, pron);
  }
  return ced_ped_hint(bias_word, policy, pron);
}

HintEntry syllable_hints(std::string_view bias_word, const Lexicon& lex,
                         const CommonWordList& common, const SelectionPolicy& policy,
                         const Pronunciation* pron, CodaMode coda_mode) {
  return HintGenerator(lex, common, coda_mode).syllable_hints(bias_word, policy, pron);
}

HintEntry vowel_hints(std::string_view bias_word, const Lexicon& lex,
                      const CommonWordList& common, const SelectionPolicy& policy,
                      const Pronunciation* pron) {
  return HintGenerator(lex, common).vowel_hints(bias_word, policy, pron);
}

HintEntry ced_ped_hint(std::string_view bias_word, const Lexicon& lex,
                       const CommonWordList& common, const SelectionPolicy& policy,
                       const Pronunciation* pron) {
  return HintGenerator(lex, common).ced_ped_hint(bias_word, policy, pron);
}

std::vector<HintOutcome> generate_hints(const std::vector<std::string>& bias_words,
                                        HintStrategy strategy, const Lexicon& lex,
                                        const CommonWordList& common,
                                        const SelectionPolicy& policy,
                                        CodaMode coda_mode) {
  HintGenerator generator(lex, common, coda_mode);
  std::vector<HintOutcome> out;
  out.reserve(bias_words.size());
  for (const std::string& word : bias_words) {
    HintOutcome outcome;
    outcome.bias_word = fold_case(word);
    SelectionPolicy per_word = policy;
    per_word.seed = derive_seed(policy.seed, outcome.bias_word);
    try {
      bool lookupable = lex.primary(outcome.bias_word) != nullptr;
      if (!lookupable && strategy != HintStrategy::kCedPed) {
        HintEntry entry = generator.ced_ped_hint(outcome.bias_word, per_word);
        entry.fallback_used = true;
        outcome.entry = std::move(entry);
      } else {
        outcome.entry = generator.generate(outcome.bias_word, strategy, per_word);
      }
    } catch (const Error& e) {
      outcome.error = e.what();
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

}  // namespace biascue
