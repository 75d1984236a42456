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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "lineametrics/syllabifier.hpp"

namespace lineametrics {

/// A word-length stream: counts[i] is the syllable count of word i.
class ProseDocument {
 public:
  ProseDocument() = default;
  /// Throws Error{kInvalidArgument} if any count is < 1.
  explicit ProseDocument(std::vector<int> counts);

  std::span<const int> counts() const noexcept { return counts_; }
  std::uint64_t words() const noexcept { return counts_.size(); }
  std::uint64_t syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return counts_.empty(); }

 private:
  std::vector<int> counts_;
  std::uint64_t syllables_ = 0;
};

struct LineRecord {
  std::vector<int> word_counts;  // non-empty, all >= 1

  int length() const noexcept;
};

class VerseDocument {
 public:
  VerseDocument() = default;
  /// Throws if a line is empty or contains a count < 1.
  explicit VerseDocument(std::vector<LineRecord> lines);

  const std::vector<LineRecord>& lines() const noexcept { return lines_; }
  std::size_t line_count() const noexcept { return lines_.size(); }

  /// Lines concatenated in order.
  const ProseDocument& stream() const noexcept { return stream_; }

 private:
  std::vector<LineRecord> lines_;
  ProseDocument stream_;
};

ProseDocument prose_from_text(std::string_view text,
                              const SyllableLexicon& lexicon);
VerseDocument verse_from_text(std::string_view text,
                              const SyllableLexicon& lexicon);

/// Throws Error{kIo} naming the path when the file cannot be read.
ProseDocument load_prose(const std::filesystem::path& path,
                         const SyllableLexicon& lexicon);
VerseDocument load_verse(const std::filesystem::path& path,
                         const SyllableLexicon& lexicon);

std::string read_file(const std::filesystem::path& path);

/// Word counts by syllable length.
class WordLengthHistogram {
 public:
  WordLengthHistogram() = default;
  /// counts[n-1] is the number of n-syllable words. Trailing zeros trimmed.
  explicit WordLengthHistogram(std::vector<std::uint64_t> counts);

  /// Reads `length<TAB>count` lines (blank and '#' lines skipped). A length
  /// listed twice is an error.
  static WordLengthHistogram load(const std::filesystem::path& path);
  static WordLengthHistogram parse(std::istream& in, std::string_view source);

  std::size_t max_length() const noexcept { return counts_.size(); }
  std::uint64_t count(int length) const noexcept;
  std::uint64_t words() const noexcept { return words_; }
  std::uint64_t syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return words_ == 0; }

  /// Normalized frequency P_n.
  double frequency(int length) const;
  /// I / W. Throws Error{kEmptyCorpus} when empty.
  double mean_length() const;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t words_ = 0;
  std::uint64_t syllables_ = 0;
};

/// Throws Error{kEmptyCorpus} for an empty document.
WordLengthHistogram word_length_histogram(const ProseDocument& doc);

}  // namespace lineametrics
