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

#include "biascue/biaslist.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "biascue/errors.hpp"
#include "biascue/rng.hpp"
#include "biascue/text.hpp"

namespace biascue {

namespace {

constexpr std::string_view kListPrefix = "Bias words: ";
constexpr std::string_view kEntrySep = "; ";
constexpr std::string_view kHintMarker = " (sounds like: ";

template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

}  // namespace

std::vector<std::string> UtteranceRecord::tokens() const {
  return split_whitespace(text);
}

void validate_record(const UtteranceRecord& rec) {
  std::vector<std::string> toks = split_whitespace(normalize_transcript(rec.text));
  for (const std::string& entry : rec.bias_words) {
    std::vector<std::string> entry_toks = split_whitespace(fold_case(entry));
    if (entry_toks.empty()) throw Error("record " + rec.id + ": empty bias entry");
    bool found = false;
    for (std::size_t i = 0; i + entry_toks.size() <= toks.size() && !found; ++i) {
      found = std::equal(entry_toks.begin(), entry_toks.end(), toks.begin() + static_cast<long>(i));
    }
    if (!found) {
      throw Error("record " + rec.id + ": bias entry '" + entry +
                  "' does not occur in the transcript");
    }
  }
}

BiasList build_bias_list(const UtteranceRecord& rec,
                         const std::vector<std::string>& distractor_pool,
                         std::size_t size, uint64_t seed) {
  std::vector<std::string> bias;
  std::unordered_set<std::string> bias_set;
  for (const std::string& w : rec.bias_words) {
    std::string folded = fold_case(w);
    if (bias_set.insert(folded).second) bias.push_back(std::move(folded));
  }
  if (size < bias.size()) {
    throw Error("bias list size " + std::to_string(size) + " is below the " +
                std::to_string(bias.size()) + " bias words of record " + rec.id);
  }

  // Distinct pool entries, own bias words excluded.
  std::vector<std::string> pool;
  std::unordered_set<std::string> seen;
  for (const std::string& w : distractor_pool) {
    std::string folded = fold_case(w);
    if (folded.empty() || bias_set.count(folded) || !seen.insert(folded).second) continue;
    pool.push_back(std::move(folded));
  }

  std::size_t need = size - bias.size();
  if (pool.size() < need) {
    throw PoolTooSmall("need " + std::to_string(need) + " distractors, pool has " +
                       std::to_string(pool.size()));
  }

  // Partial Fisher-Yates: the first `need` slots are a uniform sample
  // without replacement.
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < need; ++i) {
    std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }

  BiasList list;
  list.relevant_count = bias.size();
  list.words = std::move(bias);
  list.words.insert(list.words.end(), pool.begin(), pool.begin() + static_cast<long>(need));
  shuffle(list.words, rng);
  return list;
}

int sample_training_size(uint64_t seed) {
  SplitMix64 rng(seed);
  return static_cast<int>(rng.below(200)) + 1;
}

RenderedPrompt render_prompt(std::string_view instruction, const BiasList& list,
                             const std::vector<HintEntry>* hints) {
  std::unordered_map<std::string, const HintEntry*> by_word;
  if (hints != nullptr) {
    for (const HintEntry& h : *hints) by_word[h.bias_word] = &h;
  }

  RenderedPrompt prompt;
  prompt.instruction = std::string(instruction);
  prompt.text = prompt.instruction;
  for (const std::string& word : list.words) {
    std::string rendered = word;
    if (hints != nullptr) {
      auto it = by_word.find(word);
      if (it == by_word.end()) throw MissingHint(word);
      rendered += kHintMarker;
      rendered += join(it->second->hint_words, " ");
      rendered += ")";
    }
    prompt.list_rendering.push_back(std::move(rendered));
  }
  if (!prompt.list_rendering.empty()) {
    prompt.text += "\n";
    prompt.text += kListPrefix;
    prompt.text += join(prompt.list_rendering, kEntrySep);
  }
  return prompt;
}

ParsedPrompt parse_prompt(std::string_view text) {
  ParsedPrompt out;
  auto newline = text.find('\n');
  if (newline == std::string_view::npos) {
    out.instruction = std::string(text);
    return out;
  }
  out.instruction = std::string(text.substr(0, newline));
  std::string_view rest = text.substr(newline + 1);
  if (rest.rfind(kListPrefix, 0) != 0) {
    throw Error("prompt list line does not start with '" + std::string(kListPrefix) + "'");
  }
  rest.remove_prefix(kListPrefix.size());

  while (!rest.empty()) {
    auto sep = rest.find(kEntrySep);
    std::string_view item = sep == std::string_view::npos ? rest : rest.substr(0, sep);
    rest = sep == std::string_view::npos ? std::string_view{} : rest.substr(sep + kEntrySep.size());

    std::vector<std::string> hint_words;
    std::string word;
    auto marker = item.rfind(kHintMarker);
    if (!item.empty() && item.back() == ')' && marker != std::string_view::npos) {
      word = std::string(item.substr(0, marker));
      std::string_view inner =
          item.substr(marker + kHintMarker.size(),
                      item.size() - marker - kHintMarker.size() - 1);
      hint_words = split_whitespace(inner);
    } else {
      word = std::string(item);
    }
    out.entries.emplace_back(std::move(word), std::move(hint_words));
  }
  return out;
}

}  // namespace biascue
