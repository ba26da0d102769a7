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

#include <string>

#include "doctest.h"

#include "biascue/rng.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace biascue;

namespace {

std::string random_word(SplitMix64& rng, std::size_t max_len = 8) {
  // Small alphabet keeps interesting collisions frequent.
  static const char alphabet[] = "abcd'";
  std::string s;
  std::size_t len = rng.below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng.below(5)]);
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("distance");

TEST_CASE("ced basics") {
  CHECK(ced("abc", "abc") == 0);
  CHECK(ced("abc", "") == 3);
  CHECK(ced("", "") == 0);
  CHECK(ced("kitten", "sitting") == oracle::naive_edit_distance(std::string("kitten"),
                                                                std::string("sitting")));
  CHECK(ced("kitten", "sitting") == 3);
  CHECK(ced("o'neill", "oneill") == 1);
}

TEST_CASE("ped ignores stress and compares whole symbols") {
  Pronunciation shelley = testfix::pron("SH EH1 L IY0");
  CHECK(ped(shelley, shelley) == 0);
  CHECK(ped(testfix::pron("SH EH1"), testfix::pron("SH EH2")) == 0);
  // SH EH L IY vs SH EH R AH F: two substitutions plus one insertion.
  CHECK(ped(shelley, testfix::pron("SH EH1 R AH0 F")) == 3);
}

TEST_CASE("ced equals the exhaustive recursive oracle") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string a = random_word(rng);
    std::string b = random_word(rng);
    CHECK(ced(a, b) == oracle::naive_edit_distance(a, b));
  }
}

TEST_CASE("ped equals the exhaustive recursive oracle") {
  SplitMix64 rng(12);
  for (int iter = 0; iter < 500; ++iter) {
    Pronunciation a, b;
    std::size_t la = 1 + rng.below(6), lb = 1 + rng.below(6);
    for (std::size_t i = 0; i < la; ++i)
      a.phonemes.emplace_back(static_cast<uint8_t>(rng.below(6)), Phoneme::kNoStress);
    for (std::size_t i = 0; i < lb; ++i)
      b.phonemes.emplace_back(static_cast<uint8_t>(rng.below(6)), Phoneme::kNoStress);
    CHECK(ped(a, b) == oracle::naive_edit_distance(a.base_ids(), b.base_ids()));
  }
}

TEST_CASE("metric axioms and bounds") {
  SplitMix64 rng(13);
  for (int iter = 0; iter < 1000; ++iter) {
    std::string a = random_word(rng);
    std::string b = random_word(rng);
    std::string c = random_word(rng);
    int dab = ced(a, b), dba = ced(b, a), dac = ced(a, c), dbc = ced(b, c);
    CHECK(ced(a, a) == 0);
    CHECK(dab == dba);
    CHECK(dac <= dab + dbc);
    CHECK(dab >= std::abs(static_cast<int>(a.size()) - static_cast<int>(b.size())));
    CHECK(dab <= static_cast<int>(std::max(a.size(), b.size())));
  }
}

TEST_SUITE_END();
