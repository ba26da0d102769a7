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

#ifndef BIASCUE_TEXT_HPP_
#define BIASCUE_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace biascue {

// Simple ASCII lowercase mapping. Apostrophes, periods and other
// punctuation pass through unchanged.
std::string fold_case(std::string_view s);

// Splits on any whitespace run; no empty tokens.
std::vector<std::string> split_whitespace(std::string_view s);

// A token plus its character span [begin, end) in the source string.
struct TokenSpan {
  std::string text;
  std::size_t begin;
  std::size_t end;
};
std::vector<TokenSpan> tokenize_with_spans(std::string_view s);

// Case-folds, trims, and collapses internal whitespace runs to single
// spaces. Callers of tag_transcript are expected to run this first.
std::string normalize_transcript(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace biascue

#endif  // BIASCUE_TEXT_HPP_
