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
#include <map>
#include <vector>

#include "lineametrics/corpus.hpp"

namespace lineametrics {

using LengthHistogram = std::map<int, std::uint64_t>;

struct VerseProfile {
  LengthHistogram histogram;  // line length -> number of lines
  int core_length = 0;        // mode; ties go to the shorter length
  std::uint64_t total_lines = 0;
  std::uint64_t variant_count = 0;  // lines whose length != core_length

  /// Throws Error{kEmptyCorpus} when the histogram holds no lines.
  static VerseProfile from_histogram(LengthHistogram histogram);
};

VerseProfile line_length_profile(const VerseDocument& doc);

/// Share of lines of one exact length N with a word boundary right after
/// syllable position n. x_N is 1 by construction.
struct XDistribution {
  int length = 0;
  std::vector<double> values;  // values[n-1] = x_n
  std::uint64_t line_count = 0;

  double x(int n) const { return values.at(n - 1); }
  double total() const;  // X = sum of x_n

  /// Validates 0 <= x_n <= 1 and x_N == 1; throws Error{kInvalidArgument}.
  static XDistribution from_values(std::vector<double> values);
};

/// Throws Error{kInvalidArgument} when no line has length N.
XDistribution compute_x(const VerseDocument& doc, int length);

/// Mean of x over odd positions 1..N-1 minus mean over even positions
/// 2..N-2. Positive when boundaries favour odd positions. Requires N >= 4.
double alternation_index(const XDistribution& x);

struct ViolationCount {
  int length = 0;
  std::uint64_t cuts = 0;   // floor(I / N)
  std::uint64_t exact = 0;  // cuts at k*N that fall strictly inside a word
  double internal_proportion = 0.0;
  double expected = 0.0;  // cuts * internal_proportion
};

/// Cutting the stream every N syllables. Throws Error{kDomain} if I < N.
ViolationCount theoretical_violations(const ProseDocument& doc, int length);

/// floor(I / N) * p_internal for callers that only have totals.
double expected_violations(std::uint64_t syllables, double p_internal, int length);

struct VaryUpLineation {
  LengthHistogram histogram;
  std::vector<int> line_lengths;  // in order
  std::uint64_t trailing_syllables = 0;  // unfinished last line (< N)
  std::uint64_t trailing_words = 0;
};

/// Greedy lineation: take words until the line reaches at least N
/// syllables, close it at the end of that word, repeat.
VaryUpLineation artificial_lineation_vary_up(const ProseDocument& doc, int length);

/// Actual variant lines over the violations expected from a matched prose
/// sample: variants / (floor(verse_I / N) * p_internal(prose)).
/// Throws Error{kDomain} when the expected count is zero.
double variant_ratio(const VerseProfile& verse, const WordLengthHistogram& prose,
                     std::uint64_t verse_syllables);

struct AlignedRow {
  int line_length = 0;
  int word_length = 0;
  double line_share = 0.0;
  double word_share = 0.0;
};

struct ProfileComparison {
  int shift = 0;
  std::vector<AlignedRow> rows;
  double tv_distance = 0.0;
};

/// Lines of length N + shift + j are set against words of length 1 + j.
/// Line shares are normalized over lengths >= N and word shares over all
/// words; mass that lands opposite an empty slot counts fully toward the
/// total-variation distance.
ProfileComparison profile_vs_word_lengths(const LengthHistogram& lines, int core_length,
                                          const WordLengthHistogram& words,
                                          int shift = 0);
ProfileComparison profile_vs_word_lengths(const VerseProfile& verse,
                                          const WordLengthHistogram& words,
                                          int shift = 0);

/// Line length -> syllables per word over the lines of that length.
std::map<int, double> mean_word_length_by_class(const VerseDocument& doc);

}  // namespace lineametrics
