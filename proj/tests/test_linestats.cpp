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

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "lineametrics/error.hpp"
#include "lineametrics/linestats.hpp"
#include "lineametrics/qstats.hpp"
#include "lineametrics/synth.hpp"

using namespace lineametrics;

namespace {

VerseDocument verse(std::vector<std::vector<int>> lines) {
  std::vector<LineRecord> recs;
  for (auto& l : lines) recs.push_back(LineRecord{std::move(l)});
  return VerseDocument(std::move(recs));
}

std::set<std::uint64_t> word_ends(const std::vector<int>& counts) {
  std::set<std::uint64_t> ends;
  std::uint64_t pos = 0;
  for (int c : counts) ends.insert(pos += static_cast<std::uint64_t>(c));
  return ends;
}

std::vector<int> random_counts(std::mt19937_64& rng, std::size_t words, int max_len) {
  std::vector<int> c;
  for (std::size_t i = 0; i < words; ++i) c.push_back(1 + static_cast<int>(rng() % max_len));
  return c;
}

}  // namespace

TEST_CASE("line length profile") {
  const auto a = line_length_profile(verse({{2, 2}, {1, 2, 1}}));
  CHECK(a.histogram == LengthHistogram{{4, 2}});
  CHECK(a.core_length == 4);
  CHECK(a.variant_count == 0);

  const auto b = line_length_profile(verse({{5, 5}, {5, 5}, {5, 6}}));
  CHECK(b.histogram == LengthHistogram{{10, 2}, {11, 1}});
  CHECK(b.core_length == 10);
  CHECK(b.variant_count == 1);

  // Ties go to the shorter length.
  CHECK(line_length_profile(verse({{3}, {2}})).core_length == 2);
  CHECK_THROWS_AS(line_length_profile(VerseDocument{}), Error);
}

TEST_CASE("a long line-length table adds up") {
  const auto p = VerseProfile::from_histogram(
      {{8, 1}, {9, 163}, {10, 8315}, {11, 1887}, {12, 178}, {13, 4}});
  CHECK(p.core_length == 10);
  CHECK(p.total_lines == 10548);
  CHECK(p.variant_count == 2233);
  CHECK_THROWS_AS(VerseProfile::from_histogram({}), Error);
}

TEST_CASE("compute_x examples") {
  const auto x = compute_x(verse({{2, 2}, {1, 2, 1}}), 4);
  CHECK(x.values == std::vector<double>{0.5, 0.5, 0.5, 1.0});
  CHECK(x.line_count == 2);
  CHECK(x.total() == 2.5);

  const auto mono = compute_x(verse({std::vector<int>(6, 1), std::vector<int>(6, 1)}), 6);
  for (double v : mono.values) CHECK(v == 1.0);

  const auto whole = compute_x(verse({{7}, {3, 4}}), 7);
  CHECK(whole.values == std::vector<double>{0, 0, 0.5, 0, 0, 0, 1});

  CHECK_THROWS_AS(compute_x(verse({{2, 2}}), 5), Error);
}

TEST_CASE("compute_x agrees with boundary enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int N = 4 + static_cast<int>(rng() % 9);
    std::vector<std::vector<int>> lines;
    for (int l = 0; l < 30; ++l) {
      std::vector<int> line;
      int left = N;
      while (left > 0) {
        const int c = 1 + static_cast<int>(rng() % std::min(left, 4));
        line.push_back(c);
        left -= c;
      }
      lines.push_back(line);
    }
    lines.push_back({N + 1});  // other classes are ignored
    std::vector<double> oracle(static_cast<std::size_t>(N), 0.0);
    for (std::size_t l = 0; l + 1 < lines.size(); ++l)
      for (auto e : word_ends(lines[l])) oracle[e - 1] += 1.0 / 30;
    const auto x = compute_x(verse(lines), N);
    CHECK(x.line_count == 30);
    CHECK(x.x(N) == 1.0);
    for (int n = 1; n <= N; ++n) {
      CHECK(x.x(n) == doctest::Approx(oracle[n - 1]).epsilon(1e-12));
      CHECK(x.x(n) >= 0.0);
      CHECK(x.x(n) <= 1.0);
    }
  }
}

TEST_CASE("XDistribution validation") {
  CHECK_NOTHROW(XDistribution::from_values({0.2, 1.0}));
  CHECK_THROWS_AS(XDistribution::from_values({0.2, 0.9}), Error);
  CHECK_THROWS_AS(XDistribution::from_values({-0.1, 1.0}), Error);
  CHECK_THROWS_AS(XDistribution::from_values({1.5, 1.0}), Error);
  CHECK_THROWS_AS(XDistribution::from_values({}), Error);
}

TEST_CASE("alternation index") {
  const auto alt = XDistribution::from_values({.8, .6, .8, .6, .8, .6, .8, .6, .8, 1});
  CHECK(alternation_index(alt) == doctest::Approx(0.2));
  const auto flat = XDistribution::from_values({.7, .7, .7, .7, .7, .7, .7, 1});
  CHECK(alternation_index(flat) == doctest::Approx(0.0));
  // Boundaries favouring even positions, as in a falling eight-syllable line.
  const auto even = XDistribution::from_values({.5, .8, .5, .8, .5, .8, .5, 1});
  CHECK(alternation_index(even) < 0);
  CHECK_THROWS_AS(alternation_index(XDistribution::from_values({.5, .5, 1})), Error);
}

TEST_CASE("theoretical violations on trivial streams") {
  const auto mono = theoretical_violations(ProseDocument(std::vector<int>(100, 1)), 10);
  CHECK(mono.cuts == 10);
  CHECK(mono.exact == 0);
  CHECK(mono.expected == 0.0);

  for (int N : {2, 4, 8, 10}) {
    const auto di = theoretical_violations(ProseDocument(std::vector<int>(101, 2)), N);
    CHECK(di.exact == 0);
    CHECK(di.internal_proportion == 0.5);
  }
  // Odd N against disyllables: every other cut splits a word.
  const auto odd = theoretical_violations(ProseDocument(std::vector<int>(50, 2)), 5);
  CHECK(odd.cuts == 20);
  CHECK(odd.exact == 10);

  CHECK_THROWS_AS(theoretical_violations(ProseDocument({2, 3}), 6), Error);
}

TEST_CASE("exact violations agree with word-end enumeration") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto counts = random_counts(rng, 5 + rng() % 200, 1 + static_cast<int>(rng() % 5));
    const ProseDocument doc(counts);
    const int N = 1 + static_cast<int>(rng() % 14);
    if (doc.syllables() < static_cast<std::uint64_t>(N)) continue;
    const auto ends = word_ends(counts);
    std::uint64_t oracle = 0;
    for (std::uint64_t k = 1; k * N <= doc.syllables(); ++k)
      if (!ends.count(k * N)) ++oracle;
    CHECK(theoretical_violations(doc, N).exact == oracle);
  }
}

TEST_CASE("expected violations for a book-length count") {
  const double ten = expected_violations(456620, 0.3, 10);
  const double eight = expected_violations(456620, 0.3, 8);
  CHECK(ten == doctest::Approx(45662 * 0.3));
  CHECK(eight == doctest::Approx(57077 * 0.3));
  CHECK(std::llround(ten) == 13699);
  CHECK(std::llround(eight) == 17123);
  CHECK(std::round(eight / ten * 100) / 100 == 1.25);
}

TEST_CASE("vary-up lineation") {
  const auto a = artificial_lineation_vary_up(ProseDocument({1, 1, 2}), 2);
  CHECK(a.line_lengths == std::vector<int>{2, 2});
  CHECK(a.trailing_syllables == 0);
  const auto b = artificial_lineation_vary_up(ProseDocument({3}), 2);
  CHECK(b.line_lengths == std::vector<int>{3});
  const auto c = artificial_lineation_vary_up(ProseDocument({2, 3, 1, 1}), 4);
  CHECK(c.line_lengths == std::vector<int>{5});
  CHECK(c.trailing_syllables == 2);
  CHECK(c.trailing_words == 2);
  CHECK(c.histogram == LengthHistogram{{5, 1}});
}

TEST_CASE("vary-up invariants on random prose") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto counts = random_counts(rng, 50 + rng() % 500, 1 + static_cast<int>(rng() % 6));
    const ProseDocument doc(counts);
    const int N = 2 + static_cast<int>(rng() % 12);
    const auto v = artificial_lineation_vary_up(doc, N);
    std::uint64_t total = v.trailing_syllables, lines = 0;
    for (int len : v.line_lengths) {
      CHECK(len >= N);
      total += static_cast<std::uint64_t>(len);
    }
    for (const auto& [len, n] : v.histogram) lines += n;
    CHECK(lines == v.line_lengths.size());
    CHECK(total == doc.syllables());
    CHECK(v.trailing_syllables < static_cast<std::uint64_t>(N));

    // A line runs past N exactly when the cut at N from its start falls
    // inside a word.
    std::uint64_t start = 0;
    const auto ends = word_ends(counts);
    for (int len : v.line_lengths) {
      CHECK((len > N) == (ends.count(start + static_cast<std::uint64_t>(N)) == 0));
      start += static_cast<std::uint64_t>(len);
    }
  }
}

TEST_CASE("variant ratio") {
  const auto clean = VerseProfile::from_histogram({{10, 50}});
  CHECK(variant_ratio(clean, WordLengthHistogram({5, 3, 1}), 500) == 0.0);
  CHECK_THROWS_AS(variant_ratio(clean, WordLengthHistogram({20}), 500), Error);

  // 10 variants against floor(1000/10) * (1 - 6/9) expected.
  const auto mixed = VerseProfile::from_histogram({{10, 90}, {11, 10}});
  CHECK(variant_ratio(mixed, WordLengthHistogram({3, 3}), 1000) ==
        doctest::Approx(10.0 / (100.0 / 3)));
}

TEST_CASE("line profile against word lengths") {
  // Lines 10:6, 11:3, 12:1 against words 1:6, 2:3, 3:1.
  const LengthHistogram lines{{9, 4}, {10, 6}, {11, 3}, {12, 1}};
  const WordLengthHistogram words({6, 3, 1});
  const auto same = profile_vs_word_lengths(lines, 10, words);
  CHECK(same.tv_distance == doctest::Approx(0.0));
  REQUIRE(same.rows.size() >= 3);
  CHECK(same.rows[0].line_length == 10);
  CHECK(same.rows[0].word_length == 1);
  CHECK(same.rows[0].line_share == doctest::Approx(0.6));
  CHECK(same.rows[0].word_share == doctest::Approx(0.6));

  // Brute force over alignments: the correct one is the unique minimum.
  double best = INFINITY;
  int best_shift = 99;
  for (int shift = -3; shift <= 3; ++shift) {
    const double tv = profile_vs_word_lengths(lines, 10, words, shift).tv_distance;
    CHECK(tv >= 0.0);
    CHECK(tv <= 1.0 + 1e-12);
    if (tv < best - 1e-12) best = tv, best_shift = shift;
  }
  CHECK(best_shift == 0);
  CHECK(profile_vs_word_lengths(lines, 10, words, 1).tv_distance > 0.1);
  CHECK(profile_vs_word_lengths(lines, 10, words, -1).tv_distance > 0.1);

  const auto p = VerseProfile::from_histogram(lines);
  CHECK(profile_vs_word_lengths(p, words).tv_distance == doctest::Approx(0.0));
  CHECK_THROWS_AS(profile_vs_word_lengths(lines, 10, WordLengthHistogram{}), Error);
}

TEST_CASE("vary-up on geometric prose follows the word-length profile") {
  const auto doc = gen_geometric_prose(0.7, 200'000, 77);
  const auto v = artificial_lineation_vary_up(doc, 10);
  const auto h = word_length_histogram(doc);
  const double tv = profile_vs_word_lengths(v.histogram, 10, h).tv_distance;
  CHECK(tv < 0.03);
  CHECK(profile_vs_word_lengths(v.histogram, 10, h, 1).tv_distance > tv);
  CHECK(profile_vs_word_lengths(v.histogram, 10, h, -1).tv_distance > tv);
}

TEST_CASE("mean word length by class") {
  const auto m = mean_word_length_by_class(verse({{2, 2}, {1, 2, 1}, {5, 5, 1}}));
  CHECK(m.size() == 2);
  CHECK(m.at(4) == doctest::Approx(8.0 / 5));
  CHECK(m.at(11) == doctest::Approx(11.0 / 3));
  CHECK(mean_word_length_by_class(VerseDocument{}).empty());
}
