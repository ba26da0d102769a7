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

#ifndef BIASCUE_DISTANCE_HPP_
#define BIASCUE_DISTANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

#include "biascue/arpabet.hpp"

namespace biascue {

// Levenshtein distance under unit insert/delete/substitute costs,
// two-row dynamic programming.
template <typename T>
int levenshtein(std::span<const T> a, std::span<const T> b) {
  if (a.size() > b.size()) return levenshtein(b, a);
  std::vector<int> prev(a.size() + 1), cur(a.size() + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (std::size_t j = 1; j <= b.size(); ++j) {
    cur[0] = static_cast<int>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
      int sub = prev[i - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[i] = std::min({prev[i] + 1, cur[i - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[a.size()];
}

// Character-level edit distance. Callers case-fold first; apostrophes
// and other punctuation count as regular characters.
int ced(std::string_view a, std::string_view b);

// Phoneme-level edit distance over whole ARPAbet symbols, stress
// stripped before comparison.
int ped(const Pronunciation& a, const Pronunciation& b);
int ped(std::span<const Phoneme> a, std::span<const Phoneme> b);

// Word-level edit distance, used by the WER alignment consistency check.
int word_edit_distance(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace biascue

#endif  // BIASCUE_DISTANCE_HPP_
