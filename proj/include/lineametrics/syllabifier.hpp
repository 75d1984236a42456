// Copyright 2026 The lineametrics Authors.
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

// Text -> per-word syllable counts.
//
// Counts come from a lexicon when the case-folded word is listed, and from a
// deterministic vowel-group heuristic otherwise. The heuristic is:
//
//   1. count maximal runs of a/e/i/o/u/y (accented Latin vowels fold to
//      their base letter);
//   2. a final unaccented 'e' after a consonant is silent when at least
//      two groups were counted, except in consonant + "le" endings
//      ("table", "noble");
//   3. "ien" followed by c/t and preceded by one of b/d/l/n/r/v is two
//      syllables ("obedient", "experience", "client");
//   4. the result is floored at 1.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lineametrics {

enum class Provenance { kLexicon, kHeuristic };

struct Token {
  std::string surface;
  int syllables = 1;
  Provenance provenance = Provenance::kHeuristic;
};

/// Case-folded word form -> syllable count (always >= 1).
class SyllableLexicon {
 public:
  SyllableLexicon() = default;

  /// Reads the `word<TAB>count` format. Blank lines are ignored; anything
  /// else that does not parse throws Error{kInvalidArgument} naming the line.
  static SyllableLexicon load(const std::filesystem::path& path);
  static SyllableLexicon parse(std::istream& in, std::string_view source);

  /// Throws on count < 1, an empty key, or a key already present with a
  /// different count.
  void insert(std::string_view word, int syllables);

  std::optional<int> lookup(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }

  /// SHA-256 over the entries in sorted order; independent of file layout.
  std::string digest() const;

 private:
  std::unordered_map<std::string, int> entries_;
};

std::string fold_case(std::string_view word);

/// Maximal runs of letters joined by internal apostrophes. Hyphens split
/// words; digits, punctuation and other symbols separate them.
std::vector<std::string> tokenize(std::string_view text);

int heuristic_syllables(std::string_view word);

Token count_syllables(std::string_view word, const SyllableLexicon& lexicon);

struct UnknownWord {
  std::string word;  // case-folded
  std::uint64_t frequency = 0;
};

struct SyllabifiedText {
  std::vector<int> counts;
  /// Distinct heuristic-only words, most frequent first, ties alphabetical.
  std::vector<UnknownWord> unknown;
};

SyllabifiedText syllabify_text(std::string_view text,
                               const SyllableLexicon& lexicon);

/// `word<TAB>frequency` lines.
void write_unknown_report(std::ostream& out,
                          const std::vector<UnknownWord>& unknown);

}  // namespace lineametrics
