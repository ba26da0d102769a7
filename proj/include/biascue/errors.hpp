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

#ifndef BIASCUE_ERRORS_HPP_
#define BIASCUE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace biascue {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexicon / list parsing.
struct MalformedLine : Error {
  MalformedLine(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what),
        line_no(line_no) {}
  int line_no;
};

// Hint generation.
struct NoPronunciation : Error {
  explicit NoPronunciation(const std::string& word)
      : Error("no pronunciation for '" + word + "'"), word(word) {}
  std::string word;
};

struct NoCandidate : Error {
  explicit NoCandidate(int syllable, const std::string& what)
      : Error(what), syllable(syllable) {}
  int syllable;  // 0-based syllable index, -1 when not syllable-specific
};

struct CoverFailure : Error {
  using Error::Error;
};

// Bias lists and prompts.
struct PoolTooSmall : Error {
  using Error::Error;
};

struct MissingHint : Error {
  explicit MissingHint(const std::string& word)
      : Error("no hint entry for bias word '" + word + "'"), word(word) {}
  std::string word;
};

// Tagging.
struct LengthMismatch : Error {
  using Error::Error;
};

// CTC.
struct InfeasibleLength : Error {
  using Error::Error;
};

// Metrics.
struct EmptyReference : Error {
  using Error::Error;
};

}  // namespace biascue

#endif  // BIASCUE_ERRORS_HPP_
