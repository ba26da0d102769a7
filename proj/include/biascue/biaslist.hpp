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

#ifndef BIASCUE_BIASLIST_HPP_
#define BIASCUE_BIASLIST_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biascue/hints.hpp"

namespace biascue {

// One utterance: transcript plus the bias words (or multi-token spans)
// actually spoken in it. Every bias entry occurs in the transcript as a
// whole-token match after case folding.
struct UtteranceRecord {
  std::string id;
  std::string text;  // normalized transcript
  std::vector<std::string> bias_words;

  std::vector<std::string> tokens() const;
};

// Throws Error when some bias entry has no whole-token occurrence in
// the transcript.
void validate_record(const UtteranceRecord& rec);

// Per-utterance bias list: the utterance's own bias words plus random
// distractors, shuffled. relevant_count entries are true bias words.
struct BiasList {
  std::vector<std::string> words;
  std::size_t relevant_count = 0;
};

// Samples size - |bias_words| distractors uniformly without replacement
// from pool minus the utterance's own bias words, then shuffles the
// combined list deterministically by seed. Throws PoolTooSmall when the
// pool cannot supply enough distractors, Error when size is below the
// bias-word count.
BiasList build_bias_list(const UtteranceRecord& rec,
                         const std::vector<std::string>& distractor_pool,
                         std::size_t size, uint64_t seed);

// Uniform over {1..200}, deterministic per seed: the per-utterance
// training bias-list size.
int sample_training_size(uint64_t seed);

// A contextual-ASR prompt: the instruction line, then a "Bias words: "
// line listing the entries separated by "; ", each rendered as either
//   word
//   word (sounds like: h1 h2 ...)
// An empty bias list renders the instruction alone.
struct RenderedPrompt {
  std::string text;
  std::string instruction;
  std::vector<std::string> list_rendering;  // one rendered string per entry
};

// When hints is non-null it must cover every list entry (fallback
// entries count); otherwise MissingHint is thrown.
RenderedPrompt render_prompt(std::string_view instruction, const BiasList& list,
                             const std::vector<HintEntry>* hints = nullptr);

// Inverse of render_prompt, for round-trip checks and downstream
// consumers: recovers the instruction and the (word, hint words) pairs.
struct ParsedPrompt {
  std::string instruction;
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
};
ParsedPrompt parse_prompt(std::string_view text);

}  // namespace biascue

#endif  // BIASCUE_BIASLIST_HPP_
