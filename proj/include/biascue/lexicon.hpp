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

#ifndef BIASCUE_LEXICON_HPP_
#define BIASCUE_LEXICON_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "biascue/arpabet.hpp"

namespace biascue {

// Pronunciation dictionary in CMUdict format:
//
//   ;;; comment
//   WORD  PH1 PH2 ...
//   WORD(2)  PH1 PH2 ...
//
// Any whitespace run separates the word from its phonemes. Variant
// markers "(2)", "(3)" fold into the base word's pronunciation list in
// file order; the first occurrence is the primary pronunciation. Keys
// are case-folded (simple lowercase; apostrophes and periods kept).
//
// A word with zero phonemes, an unknown ARPAbet symbol, a vowel without
// a stress digit, or a stressed consonant raises MalformedLine with the
// offending line number. Immutable after construction.
class Lexicon {
 public:
  // Empty input yields an empty lexicon.
  static Lexicon parse(std::istream& in);
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::string& path);

  // Case-folded lookup; empty when absent. First entry is primary.
  const std::vector<Pronunciation>& lookup(std::string_view word) const;

  // Primary pronunciation or nullptr.
  const Pronunciation* primary(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // CMUdict-format dump; re-parsing it reproduces this lexicon exactly.
  std::string dump() const;

  bool operator==(const Lexicon& other) const { return entries_ == other.entries_; }

  const std::unordered_map<std::string, std::vector<Pronunciation>>& entries() const {
    return entries_;
  }

 private:
  std::unordered_map<std::string, std::vector<Pronunciation>> entries_;
  std::vector<std::string> key_order_;  // first-seen order, for dump()
};

// Vowel subsequence of p, stress removed, order preserved.
std::vector<Phoneme> vowel_sequence(const Pronunciation& p);

// Ordered, deduplicated, case-folded word list with the bias-word set
// removed at construction.
class CommonWordList {
 public:
  CommonWordList() = default;
  CommonWordList(std::vector<std::string> words,
                 std::unordered_set<std::string> excluded);

  // One word per line; blank lines skipped; first occurrence wins.
  static CommonWordList parse(std::istream& in,
                              const std::unordered_set<std::string>& exclude);
  static CommonWordList parse(std::string_view text,
                              const std::unordered_set<std::string>& exclude);
  static CommonWordList load(const std::string& path,
                             const std::unordered_set<std::string>& exclude);

  const std::vector<std::string>& words() const { return words_; }
  const std::unordered_set<std::string>& excluded() const { return excluded_; }
  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

 private:
  std::vector<std::string> words_;
  std::unordered_set<std::string> set_;
  std::unordered_set<std::string> excluded_;
};

}  // namespace biascue

#endif  // BIASCUE_LEXICON_HPP_
