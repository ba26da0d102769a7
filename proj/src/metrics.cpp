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

#include "biascue/metrics.hpp"

#include <algorithm>

#include "biascue/errors.hpp"
#include "biascue/tagging.hpp"

namespace biascue {

int WordAlignment::errors() const {
  int n = 0;
  for (const AlignStep& s : steps) n += s.op != EditOp::kMatch ? 1 : 0;
  return n;
}

WordAlignment align_words(const std::vector<std::string>& ref,
                          const std::vector<std::string>& hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<int> dp((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> int& { return dp[i * (m + 1) + j]; };

  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<int>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      int diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  // Traceback, preferring match > sub > del > ins among minimal steps.
  WordAlignment out;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && at(i, j) == at(i - 1, j - 1)) {
      out.steps.push_back({EditOp::kMatch, static_cast<long>(i - 1), static_cast<long>(j - 1)});
      --i, --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1 && ref[i - 1] != hyp[j - 1]) {
      out.steps.push_back({EditOp::kSub, static_cast<long>(i - 1), static_cast<long>(j - 1)});
      --i, --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      out.steps.push_back({EditOp::kDel, static_cast<long>(i - 1), -1});
      --i;
    } else {
      out.steps.push_back({EditOp::kIns, -1, static_cast<long>(j - 1)});
      --j;
    }
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

double WerReport::b_wer() const {
  if (b_ref == 0) throw EmptyReference("no bias reference words");
  return static_cast<double>(b_err) / static_cast<double>(b_ref);
}

double WerReport::u_wer() const {
  if (u_ref == 0) throw EmptyReference("no non-bias reference words");
  return static_cast<double>(u_err) / static_cast<double>(u_ref);
}

double WerReport::wer() const {
  if (total_ref() == 0) throw EmptyReference("empty reference");
  return static_cast<double>(total_err()) / static_cast<double>(total_ref());
}

namespace {

std::vector<bool> bias_positions(const std::vector<std::string>& tokens,
                                 const std::vector<std::string>& entries) {
  std::vector<bool> is_bias(tokens.size(), false);
  for (const EntryOccurrence& occ : find_entry_occurrences(tokens, entries)) {
    for (std::size_t k = occ.token_begin; k < occ.token_begin + occ.token_count; ++k) {
      is_bias[k] = true;
    }
  }
  return is_bias;
}

}  // namespace

WerReport score_utterance(const std::vector<std::string>& ref,
                          const std::vector<std::string>& hyp,
                          const std::vector<std::string>& bias_entries) {
  const std::vector<bool> ref_bias = bias_positions(ref, bias_entries);
  const std::vector<bool> hyp_bias = bias_positions(hyp, bias_entries);

  WerReport report;
  for (bool b : ref_bias) (b ? report.b_ref : report.u_ref) += 1;

  for (const AlignStep& step : align_words(ref, hyp).steps) {
    switch (step.op) {
      case EditOp::kMatch:
        break;
      case EditOp::kSub:
      case EditOp::kDel:
        (ref_bias[static_cast<std::size_t>(step.ref_index)] ? report.b_err
                                                            : report.u_err) += 1;
        break;
      case EditOp::kIns:
        (hyp_bias[static_cast<std::size_t>(step.hyp_index)] ? report.b_err
                                                            : report.u_err) += 1;
        break;
    }
  }
  return report;
}

WerReport aggregate(std::span<const WerReport> reports) {
  WerReport total;
  for (const WerReport& r : reports) {
    total.b_err += r.b_err;
    total.b_ref += r.b_ref;
    total.u_err += r.u_err;
    total.u_ref += r.u_ref;
  }
  return total;
}

std::string format_alignment(const WordAlignment& alignment,
                             const std::vector<std::string>& ref,
                             const std::vector<std::string>& hyp) {
  std::string ref_line = "REF:";
  std::string hyp_line = "HYP:";
  std::string op_line = " OP:";
  for (const AlignStep& step : alignment.steps) {
    std::string r = step.ref_index >= 0 ? ref[static_cast<std::size_t>(step.ref_index)] : "***";
    std::string h = step.hyp_index >= 0 ? hyp[static_cast<std::size_t>(step.hyp_index)] : "***";
    const char* op = "===";
    if (step.op == EditOp::kSub) op = "SUB";
    if (step.op == EditOp::kDel) op = "DEL";
    if (step.op == EditOp::kIns) op = "INS";
    std::size_t w = std::max({r.size(), h.size(), std::size_t{3}});
    ref_line += " " + r + std::string(w - r.size(), ' ');
    hyp_line += " " + h + std::string(w - h.size(), ' ');
    op_line += " " + std::string(op) + std::string(w - 3, ' ');
  }
  return ref_line + "\n" + hyp_line + "\n" + op_line + "\n";
}

}  // namespace biascue
