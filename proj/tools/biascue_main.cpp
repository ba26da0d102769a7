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

// biascue - bias-word pronunciation cues, bias lists, prompts,
// position tags, and B-WER/U-WER/WER scoring for contextual ASR.
//
// Exit codes: 0 success, 1 per-record failures (failure manifest
// written next to the output), 2 configuration or usage errors.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"

#include "biascue/biaslist.hpp"
#include "biascue/ctc.hpp"
#include "biascue/errors.hpp"
#include "biascue/hints.hpp"
#include "biascue/jsonl.hpp"
#include "biascue/lexicon.hpp"
#include "biascue/metrics.hpp"
#include "biascue/rng.hpp"
#include "biascue/tagging.hpp"
#include "biascue/text.hpp"

namespace {

using biascue::Json;

std::vector<std::string> read_entry_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw biascue::Error("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string entry = biascue::join(biascue::split_whitespace(line), " ");
    if (!entry.empty()) out.push_back(std::move(entry));
  }
  return out;
}

// All output files are written to <path>.tmp first and renamed into
// place, so a failed run never leaves a truncated output.
void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out.is_open()) throw biascue::Error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

struct FailureLog {
  std::vector<Json> failures;

  void add(const std::string& id, const std::string& error) {
    failures.push_back(Json{{"id", id}, {"error", error}});
  }
  // Returns the process exit code and writes the manifest if needed.
  int finish(const std::string& out_path) const {
    if (failures.empty()) return 0;
    std::string content;
    for (const Json& j : failures) content += j.dump() + "\n";
    std::string path = out_path + ".failures.jsonl";
    write_file_atomic(path, content);
    std::cerr << failures.size() << " record(s) failed; see " << path << "\n";
    return 1;
  }
};

std::string text_field(const Json& j, const char* preferred) {
  if (j.contains(preferred)) return j[preferred].get<std::string>();
  if (j.contains("text")) return j["text"].get<std::string>();
  throw biascue::Error("record " + j.value("id", std::string("?")) +
                       " has neither '" + preferred + "' nor 'text'");
}

// ---------------------------------------------------------------------------
// hints
// ---------------------------------------------------------------------------

struct HintsArgs {
  std::string lexicon_path, common_path, in_path, out_path, tsv_path;
  std::string strategy = "syl";
  std::string policy = "min-ced";
  std::string coda_mode = "auto";
  std::string onset_path;
  uint64_t seed = 0;
  bool seed_given = false;
};

int run_hints(const HintsArgs& args) {
  std::vector<std::string> bias_words = read_entry_lines(args.in_path);
  std::unordered_set<std::string> exclude(bias_words.begin(), bias_words.end());

  biascue::Lexicon lex = biascue::Lexicon::load(args.lexicon_path);
  biascue::CommonWordList common = biascue::CommonWordList::load(args.common_path, exclude);
  biascue::SelectionPolicy policy = biascue::parse_policy(args.policy, args.seed);
  biascue::HintStrategy strategy = biascue::parse_strategy(args.strategy);
  biascue::CodaMode coda = biascue::parse_coda_mode(args.coda_mode);

  biascue::OnsetTable onsets;
  if (!args.onset_path.empty()) onsets = biascue::OnsetTable::load(args.onset_path);
  const biascue::OnsetTable& table =
      args.onset_path.empty() ? biascue::OnsetTable::english() : onsets;

  biascue::HintGenerator generator(lex, common, coda, table);
  FailureLog failures;
  std::string out, tsv;
  for (const std::string& word : bias_words) {
    std::string folded = biascue::fold_case(word);
    biascue::SelectionPolicy per_word = policy;
    per_word.seed = biascue::derive_seed(policy.seed, folded);
    try {
      biascue::HintEntry entry;
      if (lex.primary(folded) == nullptr && strategy != biascue::HintStrategy::kCedPed) {
        entry = generator.ced_ped_hint(folded, per_word);
        entry.fallback_used = true;
      } else {
        entry = generator.generate(folded, strategy, per_word);
      }
      out += biascue::hint_to_json(entry).dump() + "\n";
      tsv += biascue::hint_to_tsv(entry) + "\n";
    } catch (const biascue::Error& e) {
      failures.add(folded, e.what());
    }
  }
  write_file_atomic(args.out_path, out);
  if (!args.tsv_path.empty()) write_file_atomic(args.tsv_path, tsv);
  std::cout << "hints: " << bias_words.size() - failures.failures.size() << " ok, "
            << failures.failures.size() << " failed\n";
  return failures.finish(args.out_path);
}

// ---------------------------------------------------------------------------
// biaslist
// ---------------------------------------------------------------------------

struct BiasListArgs {
  std::string manifest_path, pool_path, out_path;
  int size = 0;             // 0 means --size-random
  bool size_random = false;
  uint64_t seed = 0;
};

int run_biaslist(const BiasListArgs& args) {
  std::vector<std::string> pool = read_entry_lines(args.pool_path);
  FailureLog failures;
  std::string out;
  for (const Json& j : biascue::read_jsonl_file(args.manifest_path)) {
    biascue::UtteranceRecord rec = biascue::record_from_json(j);
    try {
      biascue::validate_record(rec);
      std::size_t size;
      if (args.size_random) {
        int sampled =
            biascue::sample_training_size(biascue::derive_seed(args.seed, rec.id + "|size"));
        // Keep the containment guarantee when an utterance has more
        // bias words than the sampled size.
        size = std::max<std::size_t>(static_cast<std::size_t>(sampled), rec.bias_words.size());
      } else {
        size = static_cast<std::size_t>(args.size);
      }
      biascue::BiasList list =
          biascue::build_bias_list(rec, pool, size, biascue::derive_seed(args.seed, rec.id));
      out += biascue::bias_list_to_json(rec.id, list).dump() + "\n";
    } catch (const biascue::Error& e) {
      failures.add(rec.id, e.what());
    }
  }
  write_file_atomic(args.out_path, out);
  return failures.finish(args.out_path);
}

// ---------------------------------------------------------------------------
// prompt
// ---------------------------------------------------------------------------

struct PromptArgs {
  std::string bias_path, hints_path, out_path;
  std::string instruction = "Transcribe this speech";
};

int run_prompt(const PromptArgs& args) {
  std::vector<biascue::HintEntry> hints;
  if (!args.hints_path.empty()) {
    for (const Json& j : biascue::read_jsonl_file(args.hints_path)) {
      hints.push_back(biascue::hint_from_json(j));
    }
  }
  const std::vector<biascue::HintEntry>* hints_ptr =
      args.hints_path.empty() ? nullptr : &hints;

  FailureLog failures;
  std::string out;
  for (const Json& j : biascue::read_jsonl_file(args.bias_path)) {
    std::string id;
    biascue::BiasList list = biascue::bias_list_from_json(j, &id);
    try {
      biascue::RenderedPrompt prompt =
          biascue::render_prompt(args.instruction, list, hints_ptr);
      out += Json{{"id", id}, {"prompt", prompt.text}}.dump() + "\n";
    } catch (const biascue::Error& e) {
      failures.add(id, e.what());
    }
  }
  write_file_atomic(args.out_path, out);
  return failures.finish(args.out_path);
}

// ---------------------------------------------------------------------------
// tag
// ---------------------------------------------------------------------------

struct TagArgs {
  std::string in_path, bias_path, out_path;
};

int run_tag(const TagArgs& args) {
  std::unordered_map<std::string, std::vector<std::string>> lists_by_id;
  if (!args.bias_path.empty()) {
    for (const Json& j : biascue::read_jsonl_file(args.bias_path)) {
      std::string id;
      biascue::BiasList list = biascue::bias_list_from_json(j, &id);
      lists_by_id[id] = std::move(list.words);
    }
  }

  FailureLog failures;
  std::string out;
  for (const Json& j : biascue::read_jsonl_file(args.in_path)) {
    biascue::UtteranceRecord rec = biascue::record_from_json(j);
    try {
      const std::vector<std::string>* entries = &rec.bias_words;
      if (!args.bias_path.empty()) {
        auto it = lists_by_id.find(rec.id);
        if (it == lists_by_id.end()) {
          throw biascue::Error("no bias list for record " + rec.id);
        }
        entries = &it->second;
      }
      std::string text = biascue::normalize_transcript(rec.text);
      biascue::TagSequence tags = biascue::tag_transcript(text, *entries);
      out += Json{{"id", rec.id}, {"text", text}, {"tags", tags}}.dump() + "\n";
    } catch (const biascue::Error& e) {
      failures.add(rec.id, e.what());
    }
  }
  write_file_atomic(args.out_path, out);
  return failures.finish(args.out_path);
}

// ---------------------------------------------------------------------------
// score
// ---------------------------------------------------------------------------

struct ScoreArgs {
  std::string ref_path, hyp_path, bias_path, out_path, per_utt_path, diff_path;
};

int run_score(const ScoreArgs& args) {
  std::vector<std::string> bias_entries;
  for (std::string& e : read_entry_lines(args.bias_path)) {
    bias_entries.push_back(biascue::fold_case(e));
  }

  std::unordered_map<std::string, std::string> hyp_by_id;
  for (const Json& j : biascue::read_jsonl_file(args.hyp_path)) {
    hyp_by_id[j.at("id").get<std::string>()] = text_field(j, "hyp");
  }

  FailureLog failures;
  std::vector<biascue::WerReport> reports;
  std::string per_utt, diff;
  for (const Json& j : biascue::read_jsonl_file(args.ref_path)) {
    std::string id = j.at("id").get<std::string>();
    try {
      auto it = hyp_by_id.find(id);
      if (it == hyp_by_id.end()) throw biascue::Error("no hypothesis for record " + id);
      std::vector<std::string> ref =
          biascue::split_whitespace(biascue::normalize_transcript(text_field(j, "ref")));
      std::vector<std::string> hyp =
          biascue::split_whitespace(biascue::normalize_transcript(it->second));
      biascue::WerReport report = biascue::score_utterance(ref, hyp, bias_entries);
      reports.push_back(report);
      if (!args.per_utt_path.empty()) {
        Json pj = biascue::report_to_json(report);
        pj["id"] = id;
        per_utt += pj.dump() + "\n";
      }
      if (!args.diff_path.empty()) {
        diff += "id: " + id + "\n";
        diff += biascue::format_alignment(biascue::align_words(ref, hyp), ref, hyp);
        diff += "\n";
      }
    } catch (const biascue::Error& e) {
      failures.add(id, e.what());
    }
  }

  biascue::WerReport total = biascue::aggregate(reports);
  write_file_atomic(args.out_path, biascue::report_to_json(total).dump(2) + "\n");
  if (!args.per_utt_path.empty()) write_file_atomic(args.per_utt_path, per_utt);
  if (!args.diff_path.empty()) write_file_atomic(args.diff_path, diff);

  auto pct = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * v);
    return std::string(buf);
  };
  std::cout << "scored " << reports.size() << " utterance(s)\n";
  if (total.total_ref() > 0) {
    std::cout << "%WER " << pct(total.wer()) << " [" << total.total_err() << "/"
              << total.total_ref() << "]";
    if (total.b_ref > 0)
      std::cout << "  %B-WER " << pct(total.b_wer()) << " [" << total.b_err << "/"
                << total.b_ref << "]";
    if (total.u_ref > 0)
      std::cout << "  %U-WER " << pct(total.u_wer()) << " [" << total.u_err << "/"
                << total.u_ref << "]";
    std::cout << "\n";
  }
  return failures.finish(args.out_path);
}

// ---------------------------------------------------------------------------
// ctc-selftest
// ---------------------------------------------------------------------------

struct SelfTestArgs {
  int instances = 1000;
  int grad_instances = 100;
  uint64_t seed = 0;
  double alpha = 1.0;
};

biascue::Matrix random_logits(std::size_t frames, biascue::SplitMix64& rng) {
  biascue::Matrix m(frames, biascue::kCtcClasses);
  for (double& v : m.values) v = rng.uniform() * 4.0 - 2.0;
  return m;
}

std::string random_feasible_labels(std::size_t frames, biascue::SplitMix64& rng) {
  static const char alphabet[] = {'b', 'n', 's'};
  for (;;) {
    std::size_t len = rng.below(4);  // 0..3
    std::string labels;
    for (std::size_t i = 0; i < len; ++i) labels.push_back(alphabet[rng.below(3)]);
    std::size_t needed = labels.size();
    for (std::size_t i = 1; i < labels.size(); ++i) {
      if (labels[i] == labels[i - 1]) ++needed;
    }
    if (needed <= frames) return labels;
  }
}

int run_ctc_selftest(const SelfTestArgs& args) {
  biascue::SplitMix64 rng(args.seed);

  double max_gap = 0.0;
  for (int i = 0; i < args.instances; ++i) {
    std::size_t frames = 1 + rng.below(6);
    biascue::Matrix logits = random_logits(frames, rng);
    std::string labels = random_feasible_labels(frames, rng);
    double dp = biascue::ctc_loss(logits, labels).nll;
    double bf = biascue::brute_force_ctc_nll(logits, labels);
    max_gap = std::max(max_gap, std::fabs(dp - bf));
  }
  bool oracle_ok = max_gap <= 1e-9;
  std::cout << "oracle:   " << args.instances << " instances, max |nll gap| = "
            << max_gap << (oracle_ok ? "  PASS" : "  FAIL") << "\n";

  const double eps = 1e-5;
  double max_rel = 0.0;
  for (int i = 0; i < args.grad_instances; ++i) {
    std::size_t frames = 1 + rng.below(6);
    biascue::Matrix logits = random_logits(frames, rng);
    std::string labels = random_feasible_labels(frames, rng);
    biascue::Matrix grad = biascue::ctc_loss(logits, labels).grad;
    for (std::size_t idx = 0; idx < logits.values.size(); ++idx) {
      biascue::Matrix up = logits, down = logits;
      up.values[idx] += eps;
      down.values[idx] -= eps;
      double fd = (biascue::ctc_loss(up, labels).nll - biascue::ctc_loss(down, labels).nll) /
                  (2.0 * eps);
      double a = grad.values[idx];
      double rel = std::fabs(a - fd) / std::max({std::fabs(a), std::fabs(fd), 1e-8});
      max_rel = std::max(max_rel, rel);
    }
  }
  bool grad_ok = max_rel < 1e-4;
  std::cout << "gradient: " << args.grad_instances << " instances, max rel err  = "
            << max_rel << (grad_ok ? "  PASS" : "  FAIL") << "\n";

  // Combined loss L = L_asr + alpha * L_ctc on random pairs.
  bool combined_ok = true;
  for (int i = 0; i < 100; ++i) {
    double l_asr = rng.uniform() * 10.0;
    double l_ctc = rng.uniform() * 10.0;
    double combined = biascue::combined_loss(l_asr, l_ctc, args.alpha);
    combined_ok = combined_ok && combined == l_asr + args.alpha * l_ctc;
    combined_ok = combined_ok && biascue::combined_loss(l_asr, l_ctc, 0.0) == l_asr;
  }
  std::cout << "combined: alpha = " << args.alpha
            << (combined_ok ? "  PASS" : "  FAIL") << "\n";

  return oracle_ok && grad_ok && combined_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "biascue: common-word pronunciation cues and evaluation tooling for "
      "contextual ASR"};
  app.require_subcommand(1);

  HintsArgs hints_args;
  CLI::App* hints = app.add_subcommand(
      "hints",
      "Generate pronunciation cues for bias words.\n"
      "Input: one bias word per line. Output: JSONL, e.g.\n"
      "  {\"bias\":\"shelley\",\"strategy\":\"syllable\",\"hints\":[\"sheriff\","
      "\"legal\"],\"fallback\":false,\"meta\":[...]}");
  hints->add_option("--lexicon", hints_args.lexicon_path, "CMUdict-format dictionary")
      ->required()->check(CLI::ExistingFile);
  hints->add_option("--common", hints_args.common_path,
                    "Common word list, one word per line (bias words are excluded)")
      ->required()->check(CLI::ExistingFile);
  hints->add_option("--in", hints_args.in_path, "Bias words, one per line")
      ->required()->check(CLI::ExistingFile);
  hints->add_option("--out", hints_args.out_path, "Output JSONL")->required();
  hints->add_option("--tsv", hints_args.tsv_path, "Optional TSV view: bias<TAB>h1 h2 ...");
  hints->add_option("--strategy", hints_args.strategy, "syl | vow | ced-ped")
      ->default_val("syl");
  hints->add_option("--policy", hints_args.policy, "min-ced | min-ced-ped | random")
      ->default_val("min-ced");
  auto* hints_seed = hints->add_option("--seed", hints_args.seed, "Seed for --policy random");
  hints->add_option("--first-syllable-coda", hints_args.coda_mode, "auto | always | never")
      ->default_val("auto");
  hints->add_option("--onsets", hints_args.onset_path,
                    "Override legal-onset table (one onset per line, e.g. 'S T R')")
      ->check(CLI::ExistingFile);

  BiasListArgs biaslist_args;
  CLI::App* biaslist = app.add_subcommand(
      "biaslist",
      "Build per-utterance bias lists with random distractors.\n"
      "Input: manifest JSONL {\"id\",\"text\",\"bias_words\":[...]}.\n"
      "Output: JSONL {\"id\",\"bias\":[...],\"relevant\":n}");
  biaslist->add_option("--manifest", biaslist_args.manifest_path, "Utterance manifest JSONL")
      ->required()->check(CLI::ExistingFile);
  biaslist->add_option("--pool", biaslist_args.pool_path, "Distractor pool, one word per line")
      ->required()->check(CLI::ExistingFile);
  auto* size_opt = biaslist->add_option("--size", biaslist_args.size,
                                        "Bias list size K (includes the utterance's bias words)")
      ->check(CLI::PositiveNumber);
  biaslist->add_flag("--size-random", biaslist_args.size_random,
                     "Sample K uniformly from 1..200 per utterance");
  biaslist->add_option("--seed", biaslist_args.seed, "Sampling/shuffle seed")->required();
  biaslist->add_option("--out", biaslist_args.out_path, "Output JSONL")->required();

  PromptArgs prompt_args;
  CLI::App* prompt = app.add_subcommand(
      "prompt",
      "Render contextual-ASR prompts from bias lists.\n"
      "Output: JSONL {\"id\",\"prompt\"}; each prompt is the instruction "
      "line then 'Bias words: w1; w2 (sounds like: h1 h2); ...'");
  prompt->add_option("--bias", prompt_args.bias_path, "Bias lists JSONL (from 'biaslist')")
      ->required()->check(CLI::ExistingFile);
  prompt->add_option("--hints", prompt_args.hints_path, "Hints JSONL (from 'hints')")
      ->check(CLI::ExistingFile);
  prompt->add_option("--instruction", prompt_args.instruction, "Task instruction line");
  prompt->add_option("--out", prompt_args.out_path, "Output JSONL")->required();

  TagArgs tag_args;
  CLI::App* tag = app.add_subcommand(
      "tag",
      "Emit character-level bias position tags (b/n/s).\n"
      "Output: JSONL {\"id\",\"text\",\"tags\"}, e.g. tags "
      "\"bbbsbbbbbsnnsnnnn\" for \"tom hanks is here\"");
  tag->add_option("--in", tag_args.in_path, "Utterance manifest JSONL")
      ->required()->check(CLI::ExistingFile);
  tag->add_option("--bias", tag_args.bias_path,
                  "Optional bias lists JSONL; default tags each record's own bias_words")
      ->check(CLI::ExistingFile);
  tag->add_option("--out", tag_args.out_path, "Output JSONL")->required();

  ScoreArgs score_args;
  CLI::App* score = app.add_subcommand(
      "score",
      "B-WER / U-WER / WER scoring.\n"
      "Inputs: JSONL {\"id\",\"ref\"} and {\"id\",\"hyp\"} ('text' also "
      "accepted), plus a bias-list file (one entry per line, multi-token "
      "entries allowed). Output: report JSON with rates and counts.");
  score->add_option("--ref", score_args.ref_path, "Reference JSONL")
      ->required()->check(CLI::ExistingFile);
  score->add_option("--hyp", score_args.hyp_path, "Hypothesis JSONL")
      ->required()->check(CLI::ExistingFile);
  score->add_option("--bias", score_args.bias_path, "Bias entries, one per line")
      ->required()->check(CLI::ExistingFile);
  score->add_option("--out", score_args.out_path, "Report JSON")->required();
  score->add_option("--per-utt", score_args.per_utt_path, "Optional per-utterance JSONL");
  score->add_option("--diff", score_args.diff_path, "Optional aligned REF/HYP/OP text view");

  SelfTestArgs selftest_args;
  CLI::App* selftest = app.add_subcommand(
      "ctc-selftest",
      "Check the CTC loss against brute-force path enumeration and "
      "finite-difference gradients; exits 0 iff all checks pass.");
  selftest->add_option("--instances", selftest_args.instances, "Oracle instances")
      ->default_val(1000);
  selftest->add_option("--grad-instances", selftest_args.grad_instances,
                       "Gradient-check instances")
      ->default_val(100);
  selftest->add_option("--seed", selftest_args.seed, "Instance generator seed");
  selftest->add_option("--alpha", selftest_args.alpha, "Combined-loss coefficient")
      ->default_val(1.0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (hints->parsed()) {
      hints_args.seed_given = hints_seed->count() > 0;
      if (hints_args.policy == "random" && !hints_args.seed_given) {
        throw biascue::Error("--seed is required with --policy random");
      }
      return run_hints(hints_args);
    }
    if (biaslist->parsed()) {
      if ((size_opt->count() > 0) == biaslist_args.size_random) {
        throw biascue::Error("exactly one of --size / --size-random is required");
      }
      return run_biaslist(biaslist_args);
    }
    if (prompt->parsed()) return run_prompt(prompt_args);
    if (tag->parsed()) return run_tag(tag_args);
    if (score->parsed()) return run_score(score_args);
    if (selftest->parsed()) return run_ctc_selftest(selftest_args);
  } catch (const biascue::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
