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

#ifndef BIASCUE_TESTS_FIXTURES_HPP_
#define BIASCUE_TESTS_FIXTURES_HPP_

#include <cassert>
#include <string>
#include <unordered_set>
#include <vector>

#include "biascue/lexicon.hpp"

namespace testfix {

// CMUdict excerpt. Entries come from the standard distribution.
inline const char* kLexiconText = R"(;;; test fixture, CMUdict format
SHELLEY  SH EH1 L IY0
SHERIFF  SH EH1 R AH0 F
LEGAL  L IY1 G AH0 L
HEALTHY  HH EH1 L TH IY0
HEAVY  HH EH1 V IY0
CAT  K AE1 T
CAB  K AE1 B
BAD  B AE1 D
BID  B IH1 D
BUD  B AH1 D
BELLY  B EH1 L IY0
THE  DH AH0
THE(2)  DH IY0
BED  B EH1 D
SEE  S IY1
SHELLED  SH EH1 L D
HELLO  HH AH0 L OW1
HELLO(2)  HH EH0 L OW1
SETTLE  S EH1 T AH0 L
SITTING  S IH1 T IH0 NG
KITTEN  K IH1 T AH0 N
LILY  L IH1 L IY0
MERRY  M EH1 R IY0
MONEY  M AH1 N IY0
CITY  S IH1 T IY0
RUFFLE  R AH1 F AH0 L
STRONG  S T R AO1 NG
SPRING  S P R IH1 NG
RHYTHM  R IH1 DH AH0 M
SINGING  S IH1 NG IH0 NG
O'NEILL  OW0 N IY1 L
SHH  SH
)";

inline const biascue::Lexicon& lexicon() {
  static const biascue::Lexicon lex = biascue::Lexicon::parse(kLexiconText);
  return lex;
}

inline biascue::CommonWordList common_list(
    const std::vector<std::string>& words,
    const std::unordered_set<std::string>& exclude = {}) {
  return biascue::CommonWordList(std::vector<std::string>(words), exclude);
}

// Parses "SH EH1 L IY0" into a Pronunciation; asserts validity.
inline biascue::Pronunciation pron(const std::string& text) {
  biascue::Pronunciation p;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) {
      auto ph = biascue::Phoneme::parse(text.substr(start, i - start));
      assert(ph.has_value());
      p.phonemes.push_back(*ph);
    }
  }
  assert(!p.phonemes.empty());
  return p;
}

}  // namespace testfix

#endif  // BIASCUE_TESTS_FIXTURES_HPP_
