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

#include "biascue/distance.hpp"

namespace biascue {

int ced(std::string_view a, std::string_view b) {
  return levenshtein(std::span<const char>(a.data(), a.size()),
                     std::span<const char>(b.data(), b.size()));
}

int ped(std::span<const Phoneme> a, std::span<const Phoneme> b) {
  std::vector<uint8_t> ia, ib;
  ia.reserve(a.size());
  ib.reserve(b.size());
  for (const Phoneme& p : a) ia.push_back(p.id());
  for (const Phoneme& p : b) ib.push_back(p.id());
  return levenshtein(std::span<const uint8_t>(ia), std::span<const uint8_t>(ib));
}

int ped(const Pronunciation& a, const Pronunciation& b) {
  return ped(std::span<const Phoneme>(a.phonemes), std::span<const Phoneme>(b.phonemes));
}

int word_edit_distance(std::span<const std::string> a, std::span<const std::string> b) {
  return levenshtein(a, b);
}

}  // namespace biascue
