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

#include "biascue/tagging.hpp"

#include <algorithm>
#include <cctype>

#include "biascue/errors.hpp"
#include "biascue/text.hpp"

namespace biascue {

std::vector<EntryOccurrence> find_entry_occurrences(
    const std::vector<std::string>& tokens, const std::vector<std::string>& entries) {
  struct Prepared {
    std::size_t index;
    std::vector<std::string> toks;
    std::size_t char_len;
  };
  std::vector<Prepared> prepared;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string folded = fold_case(entries[i]);
    std::vector<std::string> toks = split_whitespace(folded);
    if (toks.empty()) continue;
    std::size_t len = 0;
    for (const auto& t : toks) len += t.size();
    // Skip duplicates of an already-prepared entry.
    bool dup = std::any_of(prepared.begin(), prepared.end(),
                           [&](const Prepared& p) { return p.toks == toks; });
    if (!dup) prepared.push_back({i, std::move(toks), len});
  }
  std::sort(prepared.begin(), prepared.end(), [](const Prepared& a, const Prepared& b) {
    if (a.toks.size() != b.toks.size()) return a.toks.size() > b.toks.size();
    if (a.char_len != b.char_len) return a.char_len > b.char_len;
    return a.toks < b.toks;
  });

  std::vector<std::string> folded_tokens;
  folded_tokens.reserve(tokens.size());
  for (const auto& t : tokens) folded_tokens.push_back(fold_case(t));

  std::vector<bool> claimed(tokens.size(), false);
  std::vector<EntryOccurrence> out;
  for (const Prepared& p : prepared) {
    if (p.toks.size() > folded_tokens.size()) continue;
    for (std::size_t start = 0; start + p.toks.size() <= folded_tokens.size(); ++start) {
      bool match = std::equal(p.toks.begin(), p.toks.end(),
                              folded_tokens.begin() + static_cast<long>(start));
      if (!match) continue;
      bool free = true;
      for (std::size_t k = start; k < start + p.toks.size(); ++k) {
        if (claimed[k]) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      for (std::size_t k = start; k < start + p.toks.size(); ++k) claimed[k] = true;
      out.push_back({p.index, start, p.toks.size()});
    }
  }
  std::sort(out.begin(), out.end(), [](const EntryOccurrence& a, const EntryOccurrence& b) {
    return a.token_begin < b.token_begin;
  });
  return out;
}

TagSequence tag_transcript(std::string_view transcript,
                           const std::vector<std::string>& bias_entries) {
  TagSequence tags(transcript.size(), kTagNonBias);
  for (std::size_t i = 0; i < transcript.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(transcript[i]))) tags[i] = kTagSpace;
  }

  std::vector<TokenSpan> spans = tokenize_with_spans(transcript);
  std::vector<std::string> tokens;
  tokens.reserve(spans.size());
  for (const auto& s : spans) tokens.push_back(s.text);

  for (const EntryOccurrence& occ : find_entry_occurrences(tokens, bias_entries)) {
    for (std::size_t k = occ.token_begin; k < occ.token_begin + occ.token_count; ++k) {
      for (std::size_t i = spans[k].begin; i < spans[k].end; ++i) tags[i] = kTagBias;
    }
  }
  return tags;
}

UntagResult untag(std::string_view transcript, const TagSequence& tags) {
  if (transcript.size() != tags.size()) {
    throw LengthMismatch("transcript has " + std::to_string(transcript.size()) +
                         " characters but tags has " + std::to_string(tags.size()));
  }
  for (std::size_t i = 0; i < tags.size(); ++i) {
    bool space = std::isspace(static_cast<unsigned char>(transcript[i])) != 0;
    char t = tags[i];
    if (t != kTagBias && t != kTagNonBias && t != kTagSpace) {
      throw Error("invalid tag character '" + std::string(1, t) + "'");
    }
    if (space != (t == kTagSpace)) {
      throw Error("tag/whitespace mismatch at position " + std::to_string(i));
    }
  }

  // A span of class c is a maximal region of c-tagged characters where
  // interior whitespace is allowed only between two c-tagged neighbors.
  auto collect = [&](char cls) {
    std::vector<TaggedSpan> spans;
    std::size_t i = 0;
    while (i < tags.size()) {
      if (tags[i] != cls) {
        ++i;
        continue;
      }
      std::size_t begin = i;
      std::size_t end = i + 1;  // one past the last cls-tagged char
      std::size_t j = i + 1;
      while (j < tags.size()) {
        if (tags[j] == cls) {
          end = j + 1;
          ++j;
        } else if (tags[j] == kTagSpace) {
          // Look ahead past the whitespace run.
          std::size_t k = j;
          while (k < tags.size() && tags[k] == kTagSpace) ++k;
          if (k < tags.size() && tags[k] == cls) {
            j = k;
          } else {
            break;
          }
        } else {
          break;
        }
      }
      spans.push_back({std::string(transcript.substr(begin, end - begin)), begin, end});
      i = end;
    }
    return spans;
  };

  UntagResult out;
  out.bias_spans = collect(kTagBias);
  out.non_bias_spans = collect(kTagNonBias);
  return out;
}

}  // namespace biascue
