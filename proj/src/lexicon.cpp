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

#include "biascue/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "biascue/errors.hpp"
#include "biascue/text.hpp"

namespace biascue {

namespace {

const std::vector<Pronunciation> kNoPronunciations;

// "HELLO(2)" -> "HELLO". Only a trailing all-digit "(n)" is a variant
// marker; words like "O'NEILL" pass through untouched.
std::string strip_variant_marker(std::string_view word) {
  if (word.size() >= 3 && word.back() == ')') {
    auto open = word.rfind('(');
    if (open != std::string_view::npos && open > 0) {
      bool digits = open + 1 < word.size() - 1;
      for (std::size_t i = open + 1; i + 1 < word.size(); ++i) {
        if (word[i] < '0' || word[i] > '9') {
          digits = false;
          break;
        }
      }
      if (digits) return std::string(word.substr(0, open));
    }
  }
  return std::string(word);
}

}  // namespace

Lexicon Lexicon::parse(std::istream& in) {
  Lexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(";;;", 0) == 0) continue;
    std::vector<std::string> fields = split_whitespace(line);
    if (fields.empty()) continue;
    if (fields.size() < 2) {
      throw MalformedLine(line_no, "word '" + fields[0] + "' has no phonemes");
    }
    Pronunciation pron;
    pron.phonemes.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto ph = Phoneme::parse(fields[i]);
      if (!ph) {
        throw MalformedLine(line_no, "unknown ARPAbet symbol '" + fields[i] + "'");
      }
      if (ph->is_vowel() != ph->has_stress()) {
        throw MalformedLine(
            line_no, ph->is_vowel()
                         ? "vowel '" + fields[i] + "' missing stress digit"
                         : "consonant '" + fields[i] + "' carries a stress digit");
      }
      pron.phonemes.push_back(*ph);
    }
    std::string key = fold_case(strip_variant_marker(fields[0]));
    auto [it, inserted] = lex.entries_.try_emplace(key);
    if (inserted) lex.key_order_.push_back(key);
    it->second.push_back(std::move(pron));
  }
  return lex;
}

Lexicon Lexicon::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw Error("cannot open lexicon file: " + path);
  return parse(in);
}

const std::vector<Pronunciation>& Lexicon::lookup(std::string_view word) const {
  auto it = entries_.find(fold_case(word));
  if (it == entries_.end()) return kNoPronunciations;
  return it->second;
}

const Pronunciation* Lexicon::primary(std::string_view word) const {
  const auto& prons = lookup(word);
  return prons.empty() ? nullptr : &prons.front();
}

std::string Lexicon::dump() const {
  std::string out;
  for (const std::string& key : key_order_) {
    const auto& prons = entries_.at(key);
    for (std::size_t v = 0; v < prons.size(); ++v) {
      out += key;
      if (v > 0) out += "(" + std::to_string(v + 1) + ")";
      out += "  ";
      out += prons[v].to_string();
      out += "\n";
    }
  }
  return out;
}

std::vector<Phoneme> vowel_sequence(const Pronunciation& p) {
  std::vector<Phoneme> out;
  for (const Phoneme& ph : p.phonemes) {
    if (ph.is_vowel()) out.push_back(ph.stripped());
  }
  return out;
}

CommonWordList::CommonWordList(std::vector<std::string> words,
                               std::unordered_set<std::string> excluded)
    : excluded_(std::move(excluded)) {
  for (std::string& w : words) {
    std::string folded = fold_case(w);
    if (folded.empty() || excluded_.count(folded) || set_.count(folded)) continue;
    set_.insert(folded);
    words_.push_back(std::move(folded));
  }
}

CommonWordList CommonWordList::parse(std::istream& in,
                                     const std::unordered_set<std::string>& exclude) {
  std::unordered_set<std::string> folded_exclude;
  for (const std::string& w : exclude) folded_exclude.insert(fold_case(w));

  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (std::string& w : split_whitespace(line)) words.push_back(std::move(w));
  }
  return CommonWordList(std::move(words), std::move(folded_exclude));
}

CommonWordList CommonWordList::parse(std::string_view text,
                                     const std::unordered_set<std::string>& exclude) {
  std::istringstream in{std::string(text)};
  return parse(in, exclude);
}

CommonWordList CommonWordList::load(const std::string& path,
                                    const std::unordered_set<std::string>& exclude) {
  std::ifstream in(path);
  if (!in.is_open()) throw Error("cannot open word list: " + path);
  return parse(in, exclude);
}

bool CommonWordList::contains(std::string_view word) const {
  return set_.count(fold_case(word)) != 0;
}

}  // namespace biascue
