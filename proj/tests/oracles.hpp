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

// Test-only oracles, kept independent of the library implementations
// they check.

#ifndef BIASCUE_TESTS_ORACLES_HPP_
#define BIASCUE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

namespace oracle {

// Exhaustive recursion straight from the edit-distance definition. No
// memoization, so only usable for sequences up to ~8 elements.
template <typename Seq>
int naive_edit_distance(const Seq& a, const Seq& b, std::size_t i = 0, std::size_t j = 0) {
  if (i == a.size()) return static_cast<int>(b.size() - j);
  if (j == b.size()) return static_cast<int>(a.size() - i);
  int best = naive_edit_distance(a, b, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
  best = std::min(best, naive_edit_distance(a, b, i + 1, j) + 1);
  best = std::min(best, naive_edit_distance(a, b, i, j + 1) + 1);
  return best;
}

}  // namespace oracle

#endif  // BIASCUE_TESTS_ORACLES_HPP_
