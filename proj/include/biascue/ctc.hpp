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

#ifndef BIASCUE_CTC_HPP_
#define BIASCUE_CTC_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "biascue/tagging.hpp"

namespace biascue {

// Dense row-major double matrix, used both for frame-wise logits
// (I x 4) and for abstract frame features (I x d).
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), values(r * c, fill) {}

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

// TSV interchange: header line "rows<TAB>cols", then rows lines of cols
// tab-separated values. Values round-trip exactly (%.17g).
void write_matrix_tsv(std::ostream& out, const Matrix& m);
Matrix read_matrix_tsv(std::istream& in);

// Fixed class order of the tagger output. Blank must stay at index 0;
// files and tests depend on it.
inline constexpr int kCtcClasses = 4;
inline constexpr int kCtcBlank = 0;

int tag_class(char tag);   // 'b' -> 1, 'n' -> 2, 's' -> 3
char class_tag(int cls);

// CTC loss over the tag alphabet.
//
// nll = -log P(labels | softmax per frame of logits), computed with the
// standard forward recursion over the blank-augmented label sequence
// [blank, l1, blank, l2, ..., blank], entirely in log domain. grad
// holds the exact partial derivatives of nll with respect to every
// logit, from the backward recursion:
//
//   d nll / d logit[t][k] = y[t][k] - sum_{s: l'_s = k} gamma[t][s]
//
// where y is the per-frame softmax and gamma the posterior state
// occupancy. Throws InfeasibleLength when the frame count cannot carry
// the label sequence (fewer frames than labels plus required separating
// blanks), Error on a malformed matrix or label string.
struct CtcResult {
  double nll = 0.0;
  Matrix grad;
};

CtcResult ctc_loss(const Matrix& logits, std::string_view labels);

// Independent oracle: enumerates all kCtcClasses^I frame paths, sums
// the probability of those whose blank-collapse equals labels, and
// returns the negative log. Infeasible labels give +infinity. Only
// usable for small I (hard limit 12 frames).
double brute_force_ctc_nll(const Matrix& logits, std::string_view labels);

// L = l_asr + alpha * l_ctc.
double combined_loss(double l_asr, double l_ctc, double alpha);

struct LossConfig {
  double alpha = 1.0;         // combined-loss coefficient
  double learning_rate = 0.05;
  int steps = 500;
};

// Desk-scale tagger: a single linear map d -> 4 trained by plain
// gradient descent on ctc_loss. Weights are initialized uniformly in
// [-0.1, 0.1] from the seed; the run is deterministic per seed. Returns
// the nll trajectory: the initial loss followed by the loss after each
// of cfg.steps updates (length cfg.steps + 1).
std::vector<double> train_toy_tagger(const Matrix& features, std::string_view target,
                                     const LossConfig& cfg, uint64_t seed);

}  // namespace biascue

#endif  // BIASCUE_CTC_HPP_
