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

#include "biascue/ctc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "biascue/errors.hpp"
#include "biascue/rng.hpp"

namespace biascue {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logadd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

void check_logits(const Matrix& logits) {
  if (logits.rows < 1 || logits.cols != static_cast<std::size_t>(kCtcClasses)) {
    throw Error("logit matrix must be I x 4 with I >= 1");
  }
  for (double v : logits.values) {
    if (!std::isfinite(v)) throw Error("logit matrix contains a non-finite value");
  }
}

std::vector<int> label_classes(std::string_view labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (char c : labels) out.push_back(tag_class(c));
  return out;
}

std::size_t min_frames(const std::vector<int>& labels) {
  std::size_t n = labels.size();
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1]) ++n;  // repeated label needs a blank
  }
  return n;
}

// Row-wise log softmax.
Matrix log_softmax(const Matrix& logits) {
  Matrix lp(logits.rows, logits.cols);
  for (std::size_t t = 0; t < logits.rows; ++t) {
    double mx = kNegInf;
    for (std::size_t k = 0; k < logits.cols; ++k) mx = std::max(mx, logits.at(t, k));
    double sum = 0.0;
    for (std::size_t k = 0; k < logits.cols; ++k) sum += std::exp(logits.at(t, k) - mx);
    double log_z = mx + std::log(sum);
    for (std::size_t k = 0; k < logits.cols; ++k) lp.at(t, k) = logits.at(t, k) - log_z;
  }
  return lp;
}

}  // namespace

int tag_class(char tag) {
  switch (tag) {
    case kTagBias:
      return 1;
    case kTagNonBias:
      return 2;
    case kTagSpace:
      return 3;
    default:
      throw Error("invalid tag character '" + std::string(1, tag) + "'");
  }
}

char class_tag(int cls) {
  switch (cls) {
    case 1:
      return kTagBias;
    case 2:
      return kTagNonBias;
    case 3:
      return kTagSpace;
    default:
      throw Error("class " + std::to_string(cls) + " has no tag character");
  }
}

CtcResult ctc_loss(const Matrix& logits, std::string_view labels) {
  check_logits(logits);
  const std::vector<int> lab = label_classes(labels);
  const std::size_t frames = logits.rows;
  if (frames < min_frames(lab)) {
    throw InfeasibleLength(std::to_string(frames) + " frames cannot carry " +
                           std::to_string(lab.size()) + " labels (need " +
                           std::to_string(min_frames(lab)) + ")");
  }

  // Blank-augmented sequence l' = [blank, l1, blank, ..., lL, blank].
  const std::size_t states = 2 * lab.size() + 1;
  auto state_class = [&](std::size_t s) -> int {
    return (s % 2 == 1) ? lab[s / 2] : kCtcBlank;
  };
  // A skip s-2 -> s is legal only into a label state that differs from
  // the label two states back.
  auto can_skip_into = [&](std::size_t s) -> bool {
    return s >= 2 && state_class(s) != kCtcBlank && state_class(s) != state_class(s - 2);
  };

  const Matrix lp = log_softmax(logits);
  Matrix alpha(frames, states, kNegInf);
  alpha.at(0, 0) = lp.at(0, kCtcBlank);
  if (states > 1) alpha.at(0, 1) = lp.at(0, static_cast<std::size_t>(state_class(1)));
  for (std::size_t t = 1; t < frames; ++t) {
    for (std::size_t s = 0; s < states; ++s) {
      double acc = alpha.at(t - 1, s);
      if (s >= 1) acc = logadd(acc, alpha.at(t - 1, s - 1));
      if (can_skip_into(s)) acc = logadd(acc, alpha.at(t - 1, s - 2));
      alpha.at(t, s) =
          acc == kNegInf ? kNegInf : acc + lp.at(t, static_cast<std::size_t>(state_class(s)));
    }
  }

  double log_p = alpha.at(frames - 1, states - 1);
  if (states > 1) log_p = logadd(log_p, alpha.at(frames - 1, states - 2));
  if (log_p == kNegInf) {
    throw InfeasibleLength("no feasible path for the given labels");
  }

  Matrix beta(frames, states, kNegInf);
  beta.at(frames - 1, states - 1) = lp.at(frames - 1, kCtcBlank);
  if (states > 1) {
    beta.at(frames - 1, states - 2) =
        lp.at(frames - 1, static_cast<std::size_t>(state_class(states - 2)));
  }
  for (std::size_t t = frames - 1; t-- > 0;) {
    for (std::size_t s = 0; s < states; ++s) {
      double acc = beta.at(t + 1, s);
      if (s + 1 < states) acc = logadd(acc, beta.at(t + 1, s + 1));
      if (s + 2 < states && can_skip_into(s + 2)) acc = logadd(acc, beta.at(t + 1, s + 2));
      beta.at(t, s) =
          acc == kNegInf ? kNegInf : acc + lp.at(t, static_cast<std::size_t>(state_class(s)));
    }
  }

  // gamma[t][s] = P(path passes state s at frame t | labels). alpha and
  // beta both include the frame-t emission, so divide it out once.
  CtcResult result;
  result.nll = -log_p;
  result.grad = Matrix(frames, kCtcClasses);
  for (std::size_t t = 0; t < frames; ++t) {
    double class_occ[kCtcClasses] = {kNegInf, kNegInf, kNegInf, kNegInf};
    for (std::size_t s = 0; s < states; ++s) {
      double a = alpha.at(t, s);
      double b = beta.at(t, s);
      if (a == kNegInf || b == kNegInf) continue;
      int k = state_class(s);
      double g = a + b - lp.at(t, static_cast<std::size_t>(k));
      class_occ[k] = logadd(class_occ[k], g);
    }
    for (int k = 0; k < kCtcClasses; ++k) {
      double y = std::exp(lp.at(t, static_cast<std::size_t>(k)));
      double occ = class_occ[k] == kNegInf ? 0.0 : std::exp(class_occ[k] - log_p);
      result.grad.at(t, static_cast<std::size_t>(k)) = y - occ;
    }
  }
  return result;
}

double brute_force_ctc_nll(const Matrix& logits, std::string_view labels) {
  check_logits(logits);
  const std::vector<int> lab = label_classes(labels);
  const std::size_t frames = logits.rows;
  if (frames > 12) throw Error("brute-force CTC limited to 12 frames");

  // Per-frame probabilities, straight exp-normalize.
  Matrix probs(frames, kCtcClasses);
  for (std::size_t t = 0; t < frames; ++t) {
    double mx = logits.at(t, 0);
    for (int k = 1; k < kCtcClasses; ++k) mx = std::max(mx, logits.at(t, static_cast<std::size_t>(k)));
    double z = 0.0;
    for (int k = 0; k < kCtcClasses; ++k) z += std::exp(logits.at(t, static_cast<std::size_t>(k)) - mx);
    for (int k = 0; k < kCtcClasses; ++k) {
      probs.at(t, static_cast<std::size_t>(k)) =
          std::exp(logits.at(t, static_cast<std::size_t>(k)) - mx) / z;
    }
  }

  std::uint64_t total_paths = 1;
  for (std::size_t t = 0; t < frames; ++t) total_paths *= kCtcClasses;

  std::vector<int> path(frames);
  std::vector<int> collapsed;
  double total = 0.0;
  for (std::uint64_t code = 0; code < total_paths; ++code) {
    std::uint64_t c = code;
    for (std::size_t t = 0; t < frames; ++t) {
      path[t] = static_cast<int>(c % kCtcClasses);
      c /= kCtcClasses;
    }
    // Collapse: merge repeats, then drop blanks.
    collapsed.clear();
    int prev = -1;
    for (int cls : path) {
      if (cls != prev && cls != kCtcBlank) collapsed.push_back(cls);
      prev = cls;
    }
    if (collapsed != lab) continue;
    double p = 1.0;
    for (std::size_t t = 0; t < frames; ++t) {
      p *= probs.at(t, static_cast<std::size_t>(path[t]));
    }
    total += p;
  }
  if (total <= 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(total);
}

double combined_loss(double l_asr, double l_ctc, double alpha) {
  return l_asr + alpha * l_ctc;
}

std::vector<double> train_toy_tagger(const Matrix& features, std::string_view target,
                                     const LossConfig& cfg, uint64_t seed) {
  if (features.rows < 1 || features.cols < 1) {
    throw Error("feature matrix must be I x d with I, d >= 1");
  }
  if (cfg.learning_rate <= 0.0) throw Error("learning rate must be positive");
  if (cfg.steps < 0) throw Error("step count must be non-negative");

  const std::size_t frames = features.rows;
  const std::size_t dim = features.cols;

  Matrix weights(kCtcClasses, dim);
  SplitMix64 rng(seed);
  for (double& w : weights.values) w = rng.uniform() * 0.2 - 0.1;

  std::vector<double> trajectory;
  trajectory.reserve(static_cast<std::size_t>(cfg.steps) + 1);

  Matrix logits(frames, kCtcClasses);
  for (int step = 0; step <= cfg.steps; ++step) {
    for (std::size_t t = 0; t < frames; ++t) {
      for (int k = 0; k < kCtcClasses; ++k) {
        double z = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
          z += weights.at(static_cast<std::size_t>(k), j) * features.at(t, j);
        }
        logits.at(t, static_cast<std::size_t>(k)) = z;
      }
    }
    CtcResult res = ctc_loss(logits, target);
    trajectory.push_back(res.nll);
    if (step == cfg.steps) break;
    for (int k = 0; k < kCtcClasses; ++k) {
      for (std::size_t j = 0; j < dim; ++j) {
        double g = 0.0;
        for (std::size_t t = 0; t < frames; ++t) {
          g += res.grad.at(t, static_cast<std::size_t>(k)) * features.at(t, j);
        }
        weights.at(static_cast<std::size_t>(k), j) -= cfg.learning_rate * g;
      }
    }
  }
  return trajectory;
}

void write_matrix_tsv(std::ostream& out, const Matrix& m) {
  out << m.rows << "\t" << m.cols << "\n";
  char buf[64];
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", m.at(r, c));
      if (c != 0) out << "\t";
      out << buf;
    }
    out << "\n";
  }
}

Matrix read_matrix_tsv(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw Error("matrix TSV: missing rows/cols header");
  if (rows < 1 || cols < 1) throw Error("matrix TSV: dimensions must be >= 1");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (!(in >> m.values[i])) throw Error("matrix TSV: expected " + std::to_string(rows * cols) + " values");
  }
  return m;
}

}  // namespace biascue
