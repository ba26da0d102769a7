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

// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
//   1. worked hint examples        (shelley -> sheriff legal / healthy)
//   2. edit-distance oracle        (DP == exhaustive recursion + metric axioms)
//   3. CTC oracle                  (forward-backward == brute force; gradients)
//   4. toy tagger training         (500 steps to <= 10% of the initial loss)
//   5. tagging invariants          (randomized length/whitespace/round-trip)
//   6. scorer micro-suite          (worked case + decomposition invariant)
//   7. hint invariants at scale    (10K common words, 500 bias words)
//   8. bias-list construction      (containment, size, determinism, sampler mean)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "biascue/biaslist.hpp"
#include "biascue/ctc.hpp"
#include "biascue/distance.hpp"
#include "biascue/hints.hpp"
#include "biascue/jsonl.hpp"
#include "biascue/lexicon.hpp"
#include "biascue/metrics.hpp"
#include "biascue/rng.hpp"
#include "biascue/tagging.hpp"
#include "biascue/text.hpp"

#include "oracles.hpp"
#include "synthetic.hpp"

using namespace biascue;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

void require(bool ok, const std::string& what) {
  if (!ok) {
    note("FAILED: " + what);
    throw std::runtime_error(what);
  }
}

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<void()>& body) {
  g_notes.clear();
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    ok = false;
    error = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && elapsed >= time_limit_s) {
    ok = false;
    error = "time limit exceeded";
  }
  std::printf("[%s] criterion %d: %s (%.2fs, limit %gs)%s%s\n", ok ? "PASS" : "FAIL",
              number, name.c_str(), elapsed, time_limit_s, ok ? "" : " - ",
              error.c_str());
  for (const std::string& n : g_notes) std::printf("       %s\n", n.c_str());
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------------------
// Criterion 1: worked hint examples
// ---------------------------------------------------------------------------

// CMUdict pronunciations for the four words involved.
const char* kPaperLexicon =
    "SHELLEY  SH EH1 L IY0\n"
    "SHERIFF  SH EH1 R AH0 F\n"
    "LEGAL  L IY1 G AH0 L\n"
    "HEALTHY  HH EH1 L TH IY0\n";

void criterion_paper_examples() {
  Lexicon lex = Lexicon::parse(kPaperLexicon);
  CommonWordList common({"sheriff", "legal", "healthy"}, {"shelley"});

  HintEntry syl = syllable_hints("shelley", lex, common, SelectionPolicy::min_ced());
  require(syl.hint_words == std::vector<std::string>{"sheriff", "legal"},
          "syllable_hints(shelley) == [sheriff, legal]");
  require(!syl.fallback_used, "syllable hints are exact matches, no relaxation");

  HintEntry vow = vowel_hints("shelley", lex, common, SelectionPolicy::min_ced());
  require(vow.hint_words == std::vector<std::string>{"healthy"},
          "vowel_hints(shelley) == [healthy]");
}

// ---------------------------------------------------------------------------
// Criterion 2: edit-distance oracle
// ---------------------------------------------------------------------------

void criterion_distance_oracle() {
  SplitMix64 rng(0xced);
  auto random_word = [&](std::size_t max_len) {
    static const char alphabet[] = "abcde";
    std::string s;
    std::size_t len = rng.below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng.below(5)]);
    return s;
  };

  for (int iter = 0; iter < 10000; ++iter) {
    std::string a = random_word(8);
    std::string b = random_word(8);
    require(ced(a, b) == oracle::naive_edit_distance(a, b),
            "ced('" + a + "','" + b + "') equals the exhaustive recursion");
  }

  for (int iter = 0; iter < 10000; ++iter) {
    std::vector<uint8_t> a, b;
    std::size_t la = rng.below(9), lb = rng.below(9);
    for (std::size_t i = 0; i < la; ++i) a.push_back(static_cast<uint8_t>(rng.below(6)));
    for (std::size_t i = 0; i < lb; ++i) b.push_back(static_cast<uint8_t>(rng.below(6)));
    Pronunciation pa, pb;
    for (uint8_t id : a) pa.phonemes.emplace_back(id, Phoneme::kNoStress);
    for (uint8_t id : b) pb.phonemes.emplace_back(id, Phoneme::kNoStress);
    int dp = pa.phonemes.empty() || pb.phonemes.empty()
                 ? static_cast<int>(std::max(a.size(), b.size()))
                 : ped(pa, pb);
    if (!pa.phonemes.empty() && !pb.phonemes.empty()) {
      require(dp == oracle::naive_edit_distance(a, b), "ped equals the exhaustive recursion");
    }
  }

  for (int iter = 0; iter < 1000; ++iter) {
    std::string a = random_word(8), b = random_word(8), c = random_word(8);
    require(ced(a, a) == 0, "d(a,a) == 0");
    require(ced(a, b) == ced(b, a), "symmetry");
    require(ced(a, c) <= ced(a, b) + ced(b, c), "triangle inequality");
    int lo = std::abs(static_cast<int>(a.size()) - static_cast<int>(b.size()));
    int hi = static_cast<int>(std::max(a.size(), b.size()));
    require(ced(a, b) >= lo && ced(a, b) <= hi, "length bounds");
  }
}

// ---------------------------------------------------------------------------
// Criterion 3: CTC oracle
// ---------------------------------------------------------------------------

Matrix random_logits(std::size_t frames, SplitMix64& rng) {
  Matrix m(frames, kCtcClasses);
  for (double& v : m.values) v = rng.uniform() * 4.0 - 2.0;
  return m;
}

std::string random_feasible_labels(std::size_t frames, SplitMix64& rng) {
  static const char alphabet[] = {'b', 'n', 's'};
  for (;;) {
    std::string labels;
    std::size_t len = rng.below(4);
    for (std::size_t i = 0; i < len; ++i) labels.push_back(alphabet[rng.below(3)]);
    std::size_t needed = labels.size();
    for (std::size_t i = 1; i < labels.size(); ++i) {
      if (labels[i] == labels[i - 1]) ++needed;
    }
    if (needed <= frames) return labels;
  }
}

void criterion_ctc_oracle() {
  SplitMix64 rng(0xc7c);
  double max_gap = 0.0;
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t frames = 1 + rng.below(6);
    Matrix logits = random_logits(frames, rng);
    std::string labels = random_feasible_labels(frames, rng);
    double gap = std::fabs(ctc_loss(logits, labels).nll - brute_force_ctc_nll(logits, labels));
    max_gap = std::max(max_gap, gap);
  }
  note("oracle max |nll gap| = " + std::to_string(max_gap));
  require(max_gap <= 1e-9, "ctc_loss within 1e-9 of brute force on 1000 instances");

  const double eps = 1e-5;
  double max_rel = 0.0;
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t frames = 1 + rng.below(6);
    Matrix logits = random_logits(frames, rng);
    std::string labels = random_feasible_labels(frames, rng);
    Matrix grad = ctc_loss(logits, labels).grad;
    for (std::size_t idx = 0; idx < logits.values.size(); ++idx) {
      Matrix up = logits, down = logits;
      up.values[idx] += eps;
      down.values[idx] -= eps;
      double fd =
          (ctc_loss(up, labels).nll - ctc_loss(down, labels).nll) / (2.0 * eps);
      double a = grad.values[idx];
      max_rel = std::max(max_rel,
                         std::fabs(a - fd) / std::max({std::fabs(a), std::fabs(fd), 1e-8}));
    }
  }
  note("gradient max rel err = " + std::to_string(max_rel));
  require(max_rel < 1e-4, "analytic gradient within 1e-4 of central differences");
}

// ---------------------------------------------------------------------------
// Criterion 4: toy tagger training
// ---------------------------------------------------------------------------

void criterion_toy_tagger() {
  // I = 50 frames, d = 8 features, 500 steps.
  testfix::SyntheticProblem problem =
      testfix::make_separable_problem("bbnnss", 50, 8, 1234);
  LossConfig cfg;  // library defaults: 500 steps
  require(cfg.steps == 500, "default step count is 500");

  auto traj = train_toy_tagger(problem.features, problem.target, cfg, 42);
  require(traj.size() == 501, "trajectory holds the initial loss plus one per step");
  note("initial nll = " + std::to_string(traj.front()) +
       ", final nll = " + std::to_string(traj.back()));
  require(traj.back() <= 0.1 * traj.front(),
          "500 steps reduce the loss to <= 10% of its initial value");

  auto traj2 = train_toy_tagger(problem.features, problem.target, cfg, 42);
  require(traj == traj2, "trajectory is byte-for-byte reproducible per seed");
}

// ---------------------------------------------------------------------------
// Criterion 5: tagging invariants
// ---------------------------------------------------------------------------

void criterion_tagging() {
  SplitMix64 rng(0x7a9);

  for (int iter = 0; iter < 1000; ++iter) {
    // Build the transcript from a plan, so the expected bias spans are
    // known by construction: filler tokens are disjoint from bias
    // tokens and occurrences never touch.
    std::size_t n_entries = rng.below(4);
    std::vector<std::string> entries;
    for (std::size_t e = 0; e < n_entries; ++e) {
      std::string entry = "bias" + std::to_string(iter % 7) + "x" + std::to_string(e);
      if (rng.below(2) == 1) entry += " tail" + std::to_string(e);
      entries.push_back(entry);
    }

    std::vector<std::string> tokens;
    std::vector<std::string> expected_spans;
    auto add_filler = [&] {
      tokens.push_back("fill" + std::to_string(rng.below(20)));
    };
    std::size_t lead = rng.below(3);
    for (std::size_t i = 0; i < lead; ++i) add_filler();
    for (const std::string& entry : entries) {
      if (rng.below(3) == 0) continue;  // some entries stay absent
      for (const std::string& t : split_whitespace(entry)) tokens.push_back(t);
      expected_spans.push_back(entry);
      add_filler();  // separator guarantees spans never merge
    }
    std::size_t tail = rng.below(3);
    for (std::size_t i = 0; i < tail; ++i) add_filler();
    if (tokens.empty()) add_filler();

    std::string transcript = join(tokens, " ");
    TagSequence tags = tag_transcript(transcript, entries);

    require(tags.size() == transcript.size(), "tag length equals transcript length");
    for (std::size_t i = 0; i < tags.size(); ++i) {
      require((tags[i] == kTagSpace) == (transcript[i] == ' '),
              "'s' exactly at whitespace positions");
    }
    UntagResult r = untag(transcript, tags);
    require(r.bias_spans.size() == expected_spans.size(), "recovered span count");
    for (std::size_t i = 0; i < expected_spans.size(); ++i) {
      require(r.bias_spans[i].text == expected_spans[i], "recovered span text");
    }
  }

  // Substring safety.
  TagSequence tags = tag_transcript("annual report from ann", {"ann"});
  require(tags == "nnnnnnsnnnnnnsnnnnsbbb", "'ann' never tags inside 'annual'");
}

// ---------------------------------------------------------------------------
// Criterion 6: scorer micro-suite
// ---------------------------------------------------------------------------

void criterion_scorer() {
  auto ref = split_whitespace("the sheriff met shelley");
  auto hyp = split_whitespace("the sheriff met shelly");
  WerReport report = score_utterance(ref, hyp, {"shelley"});
  require(report.b_wer() == 1.0, "B-WER 100%");
  require(report.u_wer() == 0.0, "U-WER 0%");
  require(report.wer() == 0.25, "WER 25%");

  SplitMix64 rng(0x5c0);
  const std::vector<std::string> vocab = {"a", "b",   "c",     "d",
                                          "e", "tom", "hanks", "shelley"};
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t len = 1 + rng.below(10);
    std::vector<std::string> r, h;
    for (std::size_t i = 0; i < len; ++i) r.push_back(vocab[rng.below(vocab.size())]);
    for (const std::string& w : r) {
      uint64_t roll = rng.below(10);
      if (roll < 6) h.push_back(w);
      else if (roll < 8) h.push_back(vocab[rng.below(vocab.size())]);
      if (rng.below(8) == 0) h.push_back(vocab[rng.below(vocab.size())]);
    }
    std::vector<std::string> bias = {"shelley", "tom hanks"};
    WerReport rep = score_utterance(r, h, bias);
    WordAlignment alignment = align_words(r, h);
    require(rep.total_err() == static_cast<std::size_t>(alignment.errors()),
            "b_err + u_err equals the total alignment errors");
    require(rep.total_ref() == r.size(), "b_ref + u_ref equals len(ref)");

    WerReport self = score_utterance(r, r, bias);
    require(self.total_err() == 0, "score(ref, ref, B) is zero");
  }
}

// ---------------------------------------------------------------------------
// Criterion 7: hint invariants at scale
// ---------------------------------------------------------------------------

struct ScaleFixture {
  std::string lexicon_text;
  std::vector<std::string> common_words;
  std::vector<std::string> bias_words;
};

// Synthetic pronounceable words: CV syllables with a fixed
// grapheme-phoneme correspondence, so every word has a plausible
// lexicon entry.
ScaleFixture make_scale_fixture() {
  static const char* consonant_graphemes[] = {"b", "d", "f", "g", "k", "l",
                                              "m", "n", "p", "r", "s", "t"};
  static const char* consonant_phonemes[] = {"B", "D", "F", "G", "K", "L",
                                             "M", "N", "P", "R", "S", "T"};
  static const char* vowel_graphemes[] = {"a", "e", "i", "o", "u"};
  static const char* vowel_phonemes[] = {"AA", "EH", "IY", "OW", "UW"};

  SplitMix64 rng(0x5ca1e);
  ScaleFixture fx;
  std::unordered_set<std::string> seen;
  auto make_word = [&](std::size_t syllables) {
    std::string word, pron;
    for (std::size_t s = 0; s < syllables; ++s) {
      std::size_t c = rng.below(12), v = rng.below(5);
      word += consonant_graphemes[c];
      word += vowel_graphemes[v];
      pron += " ";
      pron += consonant_phonemes[c];
      pron += " ";
      pron += vowel_phonemes[v];
      pron += s == 0 ? "1" : "0";
    }
    return std::pair<std::string, std::string>(word, pron);
  };

  while (fx.common_words.size() < 10000) {
    auto [word, pron] = make_word(1 + rng.below(3));
    if (!seen.insert(word).second) continue;
    fx.common_words.push_back(word);
    fx.lexicon_text += word + " " + pron + "\n";
  }
  while (fx.bias_words.size() < 500) {
    auto [word, pron] = make_word(2 + rng.below(3));
    if (!seen.insert(word).second) continue;
    fx.bias_words.push_back(word);
    fx.lexicon_text += word + " " + pron + "\n";
  }
  return fx;
}

void criterion_hint_scale() {
  ScaleFixture fx = make_scale_fixture();
  Lexicon lex = Lexicon::parse(fx.lexicon_text);
  std::unordered_set<std::string> exclude(fx.bias_words.begin(), fx.bias_words.end());
  CommonWordList common(std::vector<std::string>(fx.common_words), exclude);
  require(common.size() == 10000, "common list holds 10000 words");
  HintGenerator generator(lex, common);

  // Precompute per-common-word phonetics for the independent rescans.
  struct Prep {
    std::vector<Phoneme> first_syl;
    std::vector<Phoneme> vowels;
  };
  std::vector<Prep> prep(common.size());
  for (std::size_t i = 0; i < common.size(); ++i) {
    const Pronunciation* p = lex.primary(common.words()[i]);
    require(p != nullptr, "every common word has a pronunciation");
    prep[i].first_syl = first_syllable_phonemes(*p);
    prep[i].vowels = vowel_sequence(*p);
  }

  auto ped_ids = [](const std::vector<Phoneme>& a, const std::vector<Phoneme>& b) {
    return ped(std::span<const Phoneme>(a), std::span<const Phoneme>(b));
  };

  const SelectionPolicy min_ced_policy = SelectionPolicy::min_ced();
  const SelectionPolicy random_policy = SelectionPolicy::seeded_random(20260810);

  std::string first_random_run;

  for (int pass = 0; pass < 2; ++pass) {
    std::string random_run;
    for (const std::string& bias : fx.bias_words) {
      const Pronunciation& bias_pron = *lex.primary(bias);
      std::vector<Syllable> syllables = syllabify(bias_pron);
      std::vector<Phoneme> bias_vowels = vowel_sequence(bias_pron);

      // --- Syllable strategy, MinCED (checked on pass 0 only) ---
      if (pass == 0) {
        HintEntry syl = generator.syllable_hints(bias, min_ced_policy);
        require(syl.strategy == HintStrategy::kSyllable, "strategy is syllable");
        require(syl.hint_words.size() == syllables.size(),
                "one hint word per syllable");
        for (std::size_t m = 0; m < syl.hint_words.size(); ++m) {
          require(syl.meta[m].syllable == static_cast<int>(m), "syllable order");
          require(common.contains(syl.hint_words[m]), "hint word in common list");
          require(syl.hint_words[m] != bias, "hint word differs from bias word");

          // Recompute the candidate set by the tiered rule and verify
          // both membership and MinCED optimality.
          std::vector<Phoneme> target = syllable_phonemes(syllables, m);
          int used_tier = -1;
          std::vector<std::size_t> candidates;
          for (int tier : {0, 1, 2}) {
            for (std::size_t i = 0; i < common.size(); ++i) {
              if (prep[i].vowels.empty()) continue;  // degenerate words excluded
              bool ok = tier == 0 ? prep[i].first_syl == target
                                  : ped_ids(prep[i].first_syl, target) <= tier;
              if (ok) candidates.push_back(i);
            }
            if (!candidates.empty()) {
              used_tier = tier;
              break;
            }
          }
          require(used_tier >= 0, "candidate set is non-empty");
          require((used_tier > 0) <= syl.fallback_used,
                  "relaxed tiers set fallback_used");
          int chosen_ced = ced(syl.hint_words[m], bias);
          bool chosen_in_set = false;
          for (std::size_t i : candidates) {
            require(chosen_ced <= ced(common.words()[i], bias),
                    "MinCED optimality in the syllable candidate set");
            chosen_in_set = chosen_in_set || common.words()[i] == syl.hint_words[m];
          }
          require(chosen_in_set, "chosen hint is in the recomputed candidate set");
        }

        // --- Vowel strategy, MinCED ---
        HintEntry vow = generator.vowel_hints(bias, min_ced_policy);
        require(vow.strategy == HintStrategy::kVowel, "strategy is vowel");
        std::vector<Phoneme> covered;
        for (std::size_t i = 0; i < vow.hint_words.size(); ++i) {
          const Pronunciation* hp = lex.primary(vow.hint_words[i]);
          require(hp != nullptr, "vowel hint word is lookupable");
          auto hv = vowel_sequence(*hp);
          require(static_cast<int>(covered.size()) == vow.meta[i].span_begin,
                  "vowel spans are contiguous");
          require(static_cast<int>(hv.size()) == vow.meta[i].span_len,
                  "span length equals the hint word's vowel count");
          covered.insert(covered.end(), hv.begin(), hv.end());
          require(common.contains(vow.hint_words[i]), "hint word in common list");
        }
        require(covered == bias_vowels,
                "concatenated hint vowels equal the bias vowel sequence");

        // --- CedPed strategy, MinCED optimality over the whole list ---
        HintEntry cp = generator.ced_ped_hint(bias, min_ced_policy);
        require(cp.strategy == HintStrategy::kCedPed, "strategy is ced_ped");
        require(cp.hint_words.size() == 1, "ced_ped emits exactly one hint word");
        int chosen = ced(cp.hint_words[0], bias);
        for (const std::string& w : common.words()) {
          if (w == bias) continue;
          require(chosen <= ced(w, bias), "global MinCED optimality");
        }
      }

      // --- SeededRandom determinism (both passes) ---
      HintEntry rnd = generator.generate(bias, HintStrategy::kSyllable, random_policy);
      random_run += hint_to_json(rnd).dump();
      random_run += "\n";
    }
    if (pass == 0) {
      first_random_run = random_run;
    } else {
      require(random_run == first_random_run,
              "seeded-random double run is byte-identical");
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: bias-list construction
// ---------------------------------------------------------------------------

void criterion_bias_lists() {
  SplitMix64 rng(0xb1a5);
  std::vector<std::string> pool;
  for (int i = 0; i < 500; ++i) pool.push_back("pool" + std::to_string(i));

  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t n_tokens = 1 + rng.below(12);
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < n_tokens; ++i) {
      tokens.push_back("tok" + std::to_string(iter) + "_" + std::to_string(i));
    }
    UtteranceRecord rec;
    rec.id = "utt" + std::to_string(iter);
    rec.text = join(tokens, " ");
    std::size_t n_bias = 1 + rng.below(std::min<std::size_t>(4, n_tokens));
    for (std::size_t i = 0; i < n_bias; ++i) rec.bias_words.push_back(tokens[i]);
    validate_record(rec);

    std::size_t size = rec.bias_words.size() + rng.below(25);
    uint64_t seed = rng.next();

    BiasList list = build_bias_list(rec, pool, size, seed);
    require(list.words.size() == size, "bias list has exactly K entries");
    std::set<std::string> unique(list.words.begin(), list.words.end());
    require(unique.size() == size, "no duplicates");
    for (const std::string& b : rec.bias_words) {
      require(unique.count(b) == 1, "every utterance bias word is contained");
    }
    require(list.relevant_count == rec.bias_words.size(), "relevant_count");

    BiasList again = build_bias_list(rec, pool, size, seed);
    require(again.words == list.words, "seed determinism");
  }

  double sum = 0.0;
  for (uint64_t seed = 0; seed < 10000; ++seed) {
    int v = sample_training_size(seed);
    require(v >= 1 && v <= 200, "sample_training_size in [1, 200]");
    sum += v;
  }
  double mean = sum / 10000.0;
  note("sample_training_size empirical mean = " + std::to_string(mean));
  require(std::fabs(mean - 100.5) <= 2.0, "empirical mean within 100.5 +/- 2");
}

}  // namespace

int main() {
  std::printf("biascue acceptance suite\n");
  criterion(1, "worked hint examples", 1.0, criterion_paper_examples);
  criterion(2, "edit-distance oracle", 30.0, criterion_distance_oracle);
  criterion(3, "CTC oracle", 60.0, criterion_ctc_oracle);
  criterion(4, "toy tagger training", 10.0, criterion_toy_tagger);
  criterion(5, "tagging invariants", 30.0, criterion_tagging);
  criterion(6, "scorer micro-suite", 30.0, criterion_scorer);
  criterion(7, "hint invariants at scale", 300.0, criterion_hint_scale);
  criterion(8, "bias-list construction", 30.0, criterion_bias_lists);

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
