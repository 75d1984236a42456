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

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lineametrics/corpus.hpp"
#include "lineametrics/error.hpp"
#include "lineametrics/syllabifier.hpp"

using namespace lineametrics;
using Strings = std::vector<std::string>;

namespace {

const SyllableLexicon& repo_lexicon() {
  static const SyllableLexicon lex =
      SyllableLexicon::load(std::string(LM_DATA_DIR) + "/lexicon.tsv");
  return lex;
}

SyllableLexicon lexicon_of(const std::string& tsv) {
  std::istringstream in(tsv);
  return SyllableLexicon::parse(in, "inline");
}

}  // namespace

TEST_CASE("tokenize strips punctuation and keeps internal apostrophes") {
  CHECK(tokenize("Of Man's first disobedience,") ==
        Strings{"Of", "Man's", "first", "disobedience"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("self-evident") == Strings{"self", "evident"});
  CHECK(tokenize("'Tis 1,000 ways -- o'er the hills'") ==
        Strings{"Tis", "ways", "o'er", "the", "hills"});
  CHECK(tokenize("tatter\xE2\x80\x99" "d weed") == Strings{"tatter\xE2\x80\x99" "d", "weed"});
  CHECK(tokenize("na\xC3\xAFve caf\xC3\xA9") == Strings{"na\xC3\xAFve", "caf\xC3\xA9"});
  CHECK(tokenize("   \n\t ").empty());
}

TEST_CASE("tokenize survives malformed UTF-8") {
  const std::string bad = "ab\xC3\x28 cd\xE2\x82 \xFF" "ef\xF0";
  const auto toks = tokenize(bad);
  CHECK(toks.front() == "ab");
  CHECK(std::find(toks.begin(), toks.end(), "cd") != toks.end());
}

TEST_CASE("count_syllables prefers the lexicon") {
  const auto lex = lexicon_of("imagination\t5\n");
  const auto t = count_syllables("Imagination", lex);
  CHECK(t.syllables == 5);
  CHECK(t.provenance == Provenance::kLexicon);
  CHECK(t.surface == "Imagination");

  const auto the = count_syllables("the", SyllableLexicon{});
  CHECK(the.syllables == 1);
  CHECK(the.provenance == Provenance::kHeuristic);
}

TEST_CASE("heuristic rule set") {
  CHECK(heuristic_syllables("disobedience") == 5);
  CHECK(heuristic_syllables("myth") == 1);  // y is a vowel
  CHECK(heuristic_syllables("rhythm") == 1);
  CHECK(heuristic_syllables("hmm") == 1);     // floor
  CHECK(heuristic_syllables("make") == 1);
  CHECK(heuristic_syllables("the") == 1);
  CHECK(heuristic_syllables("table") == 2);
  CHECK(heuristic_syllables("noble") == 2);
  CHECK(heuristic_syllables("obedient") == 4);
  CHECK(heuristic_syllables("experience") == 4);
  CHECK(heuristic_syllables("client") == 2);
  CHECK(heuristic_syllables("ancient") == 2);
  CHECK(heuristic_syllables("BEAUTY") == 2);
  CHECK(heuristic_syllables("caf\xC3\xA9") == 2);  // accented e is never silent
  CHECK(heuristic_syllables("cafe") == 1);
}

TEST_CASE("heuristic agrees with dictionary counts on common words") {
  // Counts from the CMU pronouncing dictionary.
  const std::vector<std::pair<std::string, int>> ref = {
      {"a", 1},         {"big", 1},        {"dog", 1},      {"water", 2},
      {"summer", 2},    {"beautiful", 3},  {"remember", 3}, {"history", 3},
      {"nobody", 3},    {"syllable", 3},   {"happy", 2},    {"little", 2},
      {"gentle", 2},    {"simple", 2},     {"time", 1},     {"stone", 1},
      {"winter", 2},    {"obedience", 4},  {"hand", 1},     {"understand", 3},
      {"yesterday", 3}, {"education", 4},  {"fire", 1},     {"people", 2},
      {"lady", 2},      {"gentleman", 3},  {"eye", 1},      {"eternal", 3}};
  for (const auto& [w, n] : ref) {
    CAPTURE(w);
    CHECK(heuristic_syllables(w) == n);
  }
}

TEST_CASE("lexicon dominance over random entries") {
  std::mt19937_64 rng(7);
  SyllableLexicon lex;
  std::vector<std::pair<std::string, int>> entries;
  for (int i = 0; i < 200; ++i) {
    std::string w;
    for (int k = 0; k < 3 + static_cast<int>(rng() % 6); ++k)
      w += static_cast<char>('a' + rng() % 26);
    const int n = 1 + static_cast<int>(rng() % 6);
    if (lex.lookup(w)) continue;
    lex.insert(w, n);
    entries.emplace_back(w, n);
  }
  for (const auto& [w, n] : entries) {
    const auto t = count_syllables(w, lex);
    CHECK(t.syllables == n);
    CHECK(t.provenance == Provenance::kLexicon);
  }
}

TEST_CASE("lexicon parsing and validation") {
  const auto lex = lexicon_of("  Hello \t2\n\nWORLD\t1\r\nhello\t2\n");
  CHECK(lex.size() == 2);
  CHECK(lex.lookup("hello") == 2);
  CHECK(lex.lookup("World") == 1);
  CHECK_FALSE(lex.lookup("absent").has_value());

  CHECK_THROWS_AS(lexicon_of("word\t0\n"), Error);
  CHECK_THROWS_AS(lexicon_of("word\n"), Error);
  CHECK_THROWS_AS(lexicon_of("word\tx\n"), Error);
  CHECK_THROWS_AS(lexicon_of("\t3\n"), Error);
  try {
    lexicon_of("ok\t1\nword\t2\nWord\t3\n");
    FAIL("conflicting duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidArgument);
    CHECK(std::string(e.what()).find("inline:3") != std::string::npos);
  }
  CHECK_THROWS_AS(SyllableLexicon::load("/nonexistent/lexicon.tsv"), Error);
}

TEST_CASE("lexicon digest ignores file order and layout") {
  const auto a = lexicon_of("b\t2\na\t1\n");
  const auto b = lexicon_of("A\t1\n\nb\t2\n");
  const auto c = lexicon_of("a\t1\nb\t3\n");
  CHECK(a.digest() == b.digest());
  CHECK(a.digest() != c.digest());
  CHECK(a.digest().size() == 64);
}

TEST_CASE("syllabify_text and the unknown-word report") {
  const SyllableLexicon empty;
  CHECK(syllabify_text("a big dog", empty).counts == std::vector<int>{1, 1, 1});
  const auto none = syllabify_text("", empty);
  CHECK(none.counts.empty());
  CHECK(none.unknown.empty());

  const auto lex = lexicon_of("the\t1\n");
  const auto s = syllabify_text("The cat, the bat; a cat. A bat? bat!", lex);
  CHECK(s.counts.size() == tokenize("The cat, the bat; a cat. A bat? bat!").size());
  REQUIRE(s.unknown.size() == 3);
  CHECK(s.unknown[0].word == "bat");
  CHECK(s.unknown[0].frequency == 3);
  CHECK(s.unknown[1].word == "a");  // ties alphabetical
  CHECK(s.unknown[2].word == "cat");

  std::ostringstream out;
  write_unknown_report(out, s.unknown);
  CHECK(out.str() == "bat\t3\na\t2\ncat\t2\n");
}

TEST_CASE("syllabification is idempotent and counts are positive") {
  const std::string text = "Shall I compare thee to a summer's day? 123 -- !!";
  const auto a = syllabify_text(text, repo_lexicon());
  const auto b = syllabify_text(text, repo_lexicon());
  CHECK(a.counts == b.counts);
  for (int c : a.counts) CHECK(c >= 1);
  CHECK(a.counts.size() == tokenize(text).size());
}

TEST_CASE("a fixture sonnet scans as fourteen ten-syllable lines") {
  // Hand-counted word by word.
  const std::vector<std::pair<std::string, std::vector<int>>> sonnet = {
      {"When forty winters shall besiege thy brow,", {1, 2, 2, 1, 2, 1, 1}},
      {"And dig deep trenches in thy beauty's field,", {1, 1, 1, 2, 1, 1, 2, 1}},
      {"Thy youth's proud livery so gazed on now,", {1, 1, 1, 3, 1, 1, 1, 1}},
      {"Will be a tatter'd weed of small worth held:", {1, 1, 1, 2, 1, 1, 1, 1, 1}},
      {"Then being asked, where all thy beauty lies,", {1, 2, 1, 1, 1, 1, 2, 1}},
      {"Where all the treasure of thy lusty days;", {1, 1, 1, 2, 1, 1, 2, 1}},
      {"To say, within thine own deep sunken eyes,", {1, 1, 2, 1, 1, 1, 2, 1}},
      {"Were an all-eating shame, and thriftless praise.", {1, 1, 1, 2, 1, 1, 2, 1}},
      {"How much more praise deserv'd thy beauty's use,", {1, 1, 1, 1, 2, 1, 2, 1}},
      {"If thou couldst answer 'This fair child of mine", {1, 1, 1, 2, 1, 1, 1, 1, 1}},
      {"Shall sum my count, and make my old excuse,'", {1, 1, 1, 1, 1, 1, 1, 1, 2}},
      {"Proving his beauty by succession thine!", {2, 1, 2, 1, 3, 1}},
      {"This were to be new made when thou art old,", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"And see thy blood warm when thou feel'st it cold.", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}};
  const std::string fixture = read_file(std::string(LM_DATA_DIR) + "/fixtures/sonnets.txt");
  for (const auto& [line, expected] : sonnet) {
    CAPTURE(line);
    CHECK(fixture.find(line + "\n") != std::string::npos);
    const auto s = syllabify_text(line, repo_lexicon());
    CHECK(s.counts == expected);
    int total = 0;
    for (int c : s.counts) total += c;
    CHECK(total == 10);
    CHECK(s.unknown.empty());
  }
}
