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

#include "lineametrics/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lineametrics/error.hpp"

namespace lineametrics {

ProseDocument gen_geometric_prose(double q, std::uint64_t words, std::uint64_t seed) {
  if (!(q > 0.0 && q <= 1.0))
    throw Error(ErrorKind::kInvalidArgument, "q must lie in (0, 1]");
  if (words < 1) throw Error(ErrorKind::kInvalidArgument, "words must be >= 1");

  // cdf[n-1] = P(len <= n) after truncation.
  std::array<double, kGeometricTruncation> cdf{};
  double total = 0.0;
  for (int n = 1; n <= kGeometricTruncation; ++n) {
    total += q * std::pow(1.0 - q, n - 1);
    cdf[static_cast<std::size_t>(n - 1)] = total;
  }
  for (double& c : cdf) c /= total;
  cdf.back() = 1.0;

  UnitRng rng(seed);
  std::vector<int> counts;
  counts.reserve(words);
  for (std::uint64_t i = 0; i < words; ++i) {
    const double u = rng.next();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    counts.push_back(static_cast<int>(it - cdf.begin()) + 1);
  }
  return ProseDocument(std::move(counts));
}

VerseDocument gen_lines_from_x(const XDistribution& x, std::uint64_t lines,
                               std::uint64_t seed) {
  if (x.length < 1 || x.values.size() != static_cast<std::size_t>(x.length))
    throw Error(ErrorKind::kInvalidArgument, "malformed x distribution");
  UnitRng rng(seed);
  std::vector<LineRecord> out;
  out.reserve(lines);
  for (std::uint64_t i = 0; i < lines; ++i) {
    LineRecord line;
    int run = 0;
    for (int n = 1; n < x.length; ++n) {
      ++run;
      if (rng.next() < x.x(n)) {
        line.word_counts.push_back(run);
        run = 0;
      }
    }
    line.word_counts.push_back(run + 1);
    out.push_back(std::move(line));
  }
  return VerseDocument(std::move(out));
}

std::string placeholder_word(int syllables) {
  if (syllables < 1) throw Error(ErrorKind::kInvalidArgument, "syllables must be >= 1");
  std::string w;
  w.reserve(static_cast<std::size_t>(syllables) * 2);
  for (int i = 0; i < syllables; ++i) w += "la";
  return w;
}

std::string render_prose(const ProseDocument& doc) {
  std::string out;
  std::size_t col = 0;
  for (int c : doc.counts()) {
    if (col > 0) out += ' ';
    out += placeholder_word(c);
    if (++col == 20) {
      out += '\n';
      col = 0;
    }
  }
  if (col > 0) out += '\n';
  return out;
}

std::string render_verse(const VerseDocument& doc) {
  std::string out;
  for (const auto& line : doc.lines()) {
    for (std::size_t i = 0; i < line.word_counts.size(); ++i) {
      if (i > 0) out += ' ';
      out += placeholder_word(line.word_counts[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace lineametrics
