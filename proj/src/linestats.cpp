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

#include "lineametrics/linestats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lineametrics/error.hpp"
#include "lineametrics/qstats.hpp"

namespace lineametrics {

VerseProfile VerseProfile::from_histogram(LengthHistogram histogram) {
  VerseProfile p;
  p.histogram = std::move(histogram);
  std::uint64_t best = 0;
  for (const auto& [len, count] : p.histogram) {
    p.total_lines += count;
    if (count > best) {  // strict: first (shortest) length wins ties
      best = count;
      p.core_length = len;
    }
  }
  if (p.total_lines == 0) throw Error(ErrorKind::kEmptyCorpus, "empty corpus: no verse lines");
  p.variant_count = p.total_lines - best;
  return p;
}

VerseProfile line_length_profile(const VerseDocument& doc) {
  LengthHistogram h;
  for (const auto& line : doc.lines()) ++h[line.length()];
  return VerseProfile::from_histogram(std::move(h));
}

double XDistribution::total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

XDistribution XDistribution::from_values(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorKind::kInvalidArgument, "empty x distribution");
  for (double v : values)
    if (!(v >= 0.0 && v <= 1.0))
      throw Error(ErrorKind::kInvalidArgument, "x_n must lie in [0, 1]");
  if (values.back() != 1.0)
    throw Error(ErrorKind::kInvalidArgument, "x_N must equal 1");
  XDistribution x;
  x.length = static_cast<int>(values.size());
  x.values = std::move(values);
  return x;
}

XDistribution compute_x(const VerseDocument& doc, int length) {
  if (length < 1) throw Error(ErrorKind::kInvalidArgument, "line length must be >= 1");
  std::vector<std::uint64_t> boundaries(static_cast<std::size_t>(length), 0);
  std::uint64_t lines = 0;
  for (const auto& line : doc.lines()) {
    if (line.length() != length) continue;
    ++lines;
    int pos = 0;
    for (int c : line.word_counts) {
      pos += c;
      ++boundaries[pos - 1];
    }
  }
  if (lines == 0)
    throw Error(ErrorKind::kInvalidArgument,
                "no lines of length " + std::to_string(length));
  XDistribution x;
  x.length = length;
  x.line_count = lines;
  for (auto b : boundaries)
    x.values.push_back(static_cast<double>(b) / static_cast<double>(lines));
  return x;
}

double alternation_index(const XDistribution& x) {
  if (x.length < 4)
    throw Error(ErrorKind::kInvalidArgument, "alternation index needs N >= 4");
  double odd = 0, even = 0;
  int n_odd = 0, n_even = 0;
  for (int n = 1; n <= x.length - 1; ++n) {
    if (n % 2 == 1) {
      odd += x.x(n);
      ++n_odd;
    } else if (n <= x.length - 2) {
      even += x.x(n);
      ++n_even;
    }
  }
  return odd / n_odd - even / n_even;
}

double expected_violations(std::uint64_t syllables, double p_internal, int length) {
  if (length < 1) throw Error(ErrorKind::kInvalidArgument, "line length must be >= 1");
  return static_cast<double>(syllables / static_cast<std::uint64_t>(length)) * p_internal;
}

ViolationCount theoretical_violations(const ProseDocument& doc, int length) {
  if (length < 1) throw Error(ErrorKind::kInvalidArgument, "line length must be >= 1");
  if (doc.syllables() < static_cast<std::uint64_t>(length))
    throw Error(ErrorKind::kDomain, "text has fewer syllables than one line");

  ViolationCount v;
  v.length = length;
  v.cuts = doc.syllables() / static_cast<std::uint64_t>(length);
  v.internal_proportion = internal_boundary_proportion(word_length_histogram(doc));
  v.expected = static_cast<double>(v.cuts) * v.internal_proportion;

  // Merge the cut positions k*N against the running word-end positions.
  std::uint64_t word_end = 0;
  std::size_t i = 0;
  const auto counts = doc.counts();
  for (std::uint64_t k = 1; k <= v.cuts; ++k) {
    const std::uint64_t cut = k * static_cast<std::uint64_t>(length);
    while (word_end < cut) word_end += counts[i++];
    if (word_end != cut) ++v.exact;
  }
  return v;
}

VaryUpLineation artificial_lineation_vary_up(const ProseDocument& doc, int length) {
  if (length < 1) throw Error(ErrorKind::kInvalidArgument, "line length must be >= 1");
  if (doc.empty()) throw Error(ErrorKind::kEmptyCorpus, "empty corpus");
  VaryUpLineation out;
  int current = 0;
  std::uint64_t words = 0;
  for (int c : doc.counts()) {
    current += c;
    ++words;
    if (current >= length) {
      out.line_lengths.push_back(current);
      ++out.histogram[current];
      current = 0;
      words = 0;
    }
  }
  out.trailing_syllables = static_cast<std::uint64_t>(current);
  out.trailing_words = words;
  return out;
}

double variant_ratio(const VerseProfile& verse, const WordLengthHistogram& prose,
                     std::uint64_t verse_syllables) {
  const double expected = expected_violations(
      verse_syllables, internal_boundary_proportion(prose), verse.core_length);
  if (expected <= 0.0)
    throw Error(ErrorKind::kDomain, "matched prose yields zero expected violations");
  return static_cast<double>(verse.variant_count) / expected;
}

ProfileComparison profile_vs_word_lengths(const LengthHistogram& lines, int core_length,
                                          const WordLengthHistogram& words, int shift) {
  if (words.empty()) throw Error(ErrorKind::kEmptyCorpus, "empty word histogram");
  std::uint64_t line_total = 0;
  int max_line = core_length;
  for (const auto& [len, count] : lines) {
    if (len < core_length) continue;
    line_total += count;
    max_line = std::max(max_line, len);
  }
  if (line_total == 0)
    throw Error(ErrorKind::kEmptyCorpus, "no lines at or above the core length");

  auto line_share = [&](int len) -> double {
    if (len < core_length) return 0.0;
    auto it = lines.find(len);
    return it == lines.end() ? 0.0
                             : static_cast<double>(it->second) / static_cast<double>(line_total);
  };

  // j indexes word length 1 + j and line length core + shift + j.
  const int j_min = std::min(0, -shift);
  const int j_max = std::max(static_cast<int>(words.max_length()) - 1,
                             max_line - core_length - shift);
  ProfileComparison cmp;
  cmp.shift = shift;
  double tv = 0.0;
  for (int j = j_min; j <= j_max; ++j) {
    AlignedRow row;
    row.line_length = core_length + shift + j;
    row.word_length = 1 + j;
    row.line_share = line_share(row.line_length);
    row.word_share = row.word_length >= 1 ? words.frequency(row.word_length) : 0.0;
    tv += std::abs(row.line_share - row.word_share);
    cmp.rows.push_back(row);
  }
  cmp.tv_distance = 0.5 * tv;
  return cmp;
}

ProfileComparison profile_vs_word_lengths(const VerseProfile& verse,
                                          const WordLengthHistogram& words, int shift) {
  return profile_vs_word_lengths(verse.histogram, verse.core_length, words, shift);
}

std::map<int, double> mean_word_length_by_class(const VerseDocument& doc) {
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> acc;  // syllables, words
  for (const auto& line : doc.lines()) {
    auto& [syl, w] = acc[line.length()];
    syl += static_cast<std::uint64_t>(line.length());
    w += line.word_counts.size();
  }
  std::map<int, double> out;
  for (const auto& [len, sw] : acc)
    out[len] = static_cast<double>(sw.first) / static_cast<double>(sw.second);
  return out;
}

}  // namespace lineametrics
