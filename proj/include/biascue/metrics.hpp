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

#ifndef BIASCUE_METRICS_HPP_
#define BIASCUE_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace biascue {

// B-WER / U-WER / WER: word error rates restricted to bias words, to
// non-bias words, and over the whole transcription.
//
// Conventions (the paper-standard metrics leave these open):
//  - a reference token is bias iff it falls inside a whole-token
//    occurrence of a bias-list entry, resolved exactly like the tagger;
//  - substitutions and deletions count against the reference token's
//    class, insertions against the hypothesis token's class, so a
//    hallucinated bias word hurts B-WER.

enum class EditOp { kMatch, kSub, kDel, kIns };

struct AlignStep {
  EditOp op;
  long ref_index;  // -1 for insertions
  long hyp_index;  // -1 for deletions
};

struct WordAlignment {
  std::vector<AlignStep> steps;
  int errors() const;  // substitutions + deletions + insertions
};

// Minimal-cost Levenshtein alignment under unit costs. Among minimal
// alignments the traceback prefers match > sub > del > ins.
WordAlignment align_words(const std::vector<std::string>& ref,
                          const std::vector<std::string>& hyp);

struct WerReport {
  std::size_t b_err = 0;
  std::size_t b_ref = 0;
  std::size_t u_err = 0;
  std::size_t u_ref = 0;

  std::size_t total_err() const { return b_err + u_err; }
  std::size_t total_ref() const { return b_ref + u_ref; }

  // Error rates as fractions. Insertions can push them above 1. Throws
  // EmptyReference when the denominator is zero.
  double b_wer() const;
  double u_wer() const;
  double wer() const;
};

// Aligns and classifies one utterance. Inputs are case-folded by the
// caller (normalize_transcript / fold_case).
WerReport score_utterance(const std::vector<std::string>& ref,
                          const std::vector<std::string>& hyp,
                          const std::vector<std::string>& bias_entries);

// Micro-average: field-wise sums; rates recomputed from the summed
// counts, never averaged.
WerReport aggregate(std::span<const WerReport> reports);

// Three-line REF/HYP/OP view of an alignment, for debugging.
std::string format_alignment(const WordAlignment& alignment,
                             const std::vector<std::string>& ref,
                             const std::vector<std::string>& hyp);

}  // namespace biascue

#endif  // BIASCUE_METRICS_HPP_
