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

#ifndef BIASCUE_TAGGING_HPP_
#define BIASCUE_TAGGING_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace biascue {

// Character-level bias-position tags over the alphabet
//   'b' bias-word character
//   'n' non-bias character
//   's' whitespace
// One tag per transcript character; 's' exactly at whitespace positions.
using TagSequence = std::string;

inline constexpr char kTagBias = 'b';
inline constexpr char kTagNonBias = 'n';
inline constexpr char kTagSpace = 's';

// A whole-token-sequence occurrence of a bias entry in a token stream.
struct EntryOccurrence {
  std::size_t entry_index;  // into the entries vector passed in
  std::size_t token_begin;  // first matched token
  std::size_t token_count;
};

// Finds non-overlapping whole-token occurrences of the entries.
// Overlaps are resolved longest-entry-first (token count, then
// character length, then lexicographic), then leftmost: an occurrence
// is kept only if none of its tokens is already claimed. The tagger and
// the WER scorer share this resolution so their bias classes agree.
std::vector<EntryOccurrence> find_entry_occurrences(
    const std::vector<std::string>& tokens, const std::vector<std::string>& entries);

// Tags every character of the transcript. The transcript is expected in
// normalize_transcript() form (case-folded, single-space separated);
// matching is case-insensitive regardless. Entries absent from the
// transcript contribute no 'b' spans. Whitespace inside a multi-token
// entry stays 's'.
TagSequence tag_transcript(std::string_view transcript,
                           const std::vector<std::string>& bias_entries);

// Recovered spans: the text and character range of each maximal bias or
// non-bias region. Adjacent bias tokens separated only by whitespace
// merge into one span (the tags cannot distinguish one multi-token
// entry from adjacent entries).
struct TaggedSpan {
  std::string text;
  std::size_t begin;
  std::size_t end;
};

struct UntagResult {
  std::vector<TaggedSpan> bias_spans;
  std::vector<TaggedSpan> non_bias_spans;
};

// Inverse view of tag_transcript. Throws LengthMismatch when tags and
// transcript disagree in length, Error on a tag/whitespace mismatch.
UntagResult untag(std::string_view transcript, const TagSequence& tags);

}  // namespace biascue

#endif  // BIASCUE_TAGGING_HPP_
