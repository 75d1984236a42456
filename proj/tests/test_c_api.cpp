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

// Exercises the shared library through its C interface only.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lineametrics/lineametrics.h"

namespace {

const std::string kData = LM_DATA_DIR;

std::string last_error() { return lm_last_error(); }

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(lm_status_name(LM_OK)) == "ok");
  CHECK(std::string(lm_status_name(LM_ERR_BUFFER_TOO_SMALL)).size() > 0);
  lm_prose* p = nullptr;
  CHECK(lm_prose_from_counts(nullptr, 3, &p) == LM_ERR_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  CHECK_FALSE(last_error().empty());
  uint64_t w = 0;
  const int counts[] = {1, 2};
  REQUIRE(lm_prose_from_counts(counts, 2, &p) == LM_OK);
  CHECK(last_error().empty());
  CHECK(lm_prose_words(p, &w) == LM_OK);
  CHECK(w == 2);
  lm_prose_free(p);

  lm_prose_free(nullptr);
  lm_verse_free(nullptr);
  lm_lexicon_free(nullptr);
  lm_histogram_free(nullptr);
}

TEST_CASE("digests") {
  char hex[65];
  REQUIRE(lm_sha256_hex("abc", 3, hex) == LM_OK);
  CHECK(std::string(hex) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  REQUIRE(lm_sha256_hex("", 0, hex) == LM_OK);
  CHECK(std::string(hex) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");

  const auto path = std::filesystem::temp_directory_path() / "lm_c_api_abc.txt";
  std::ofstream(path) << "abc";
  REQUIRE(lm_sha256_file(path.c_str(), hex) == LM_OK);
  CHECK(std::string(hex).substr(0, 8) == "ba7816bf");
  std::filesystem::remove(path);
  CHECK(lm_sha256_file("/nonexistent/file", hex) == LM_ERR_IO);
}

TEST_CASE("lexicon and syllable counts") {
  lm_lexicon* lex = nullptr;
  REQUIRE(lm_lexicon_load((kData + "/lexicon.tsv").c_str(), &lex) == LM_OK);
  size_t size = 0;
  CHECK(lm_lexicon_size(lex, &size) == LM_OK);
  CHECK(size > 100000);
  char hex[65];
  CHECK(lm_lexicon_digest(lex, hex) == LM_OK);
  CHECK(std::strlen(hex) == 64);

  int syl = 0, hit = 0;
  CHECK(lm_count_syllables(lex, "beauty", &syl, &hit) == LM_OK);
  CHECK(syl == 2);
  CHECK(hit == 1);
  CHECK(lm_heuristic_syllables("disobedience", &syl) == LM_OK);
  CHECK(syl == 5);
  CHECK(lm_heuristic_syllables(nullptr, &syl) == LM_ERR_INVALID_ARGUMENT);

  lm_lexicon* empty = nullptr;
  REQUIRE(lm_lexicon_new(&empty) == LM_OK);
  CHECK(lm_count_syllables(empty, "beauty", &syl, &hit) == LM_OK);
  CHECK(hit == 0);

  const auto report = std::filesystem::temp_directory_path() / "lm_c_api_unknown.tsv";
  const std::string text = "the cat the bat";
  size_t types = 0;
  CHECK(lm_write_unknown_report(empty, text.data(), text.size(), report.c_str(), &types) ==
        LM_OK);
  CHECK(types == 3);
  std::filesystem::remove(report);

  CHECK(lm_lexicon_load("/nonexistent.tsv", &lex) == LM_ERR_IO);
  lm_lexicon_free(lex);
  lm_lexicon_free(empty);
}

TEST_CASE("buffers follow the size-query convention") {
  const int counts[] = {1, 2, 1, 3};
  lm_prose* p = nullptr;
  REQUIRE(lm_prose_from_counts(counts, 4, &p) == LM_OK);
  size_t needed = 0;
  CHECK(lm_prose_counts(p, nullptr, 0, &needed) == LM_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == 4);
  std::vector<int> small(2, -1);
  CHECK(lm_prose_counts(p, small.data(), 2, &needed) == LM_ERR_BUFFER_TOO_SMALL);
  CHECK(small == std::vector<int>{-1, -1});
  std::vector<int> out(needed);
  CHECK(lm_prose_counts(p, out.data(), out.size(), &needed) == LM_OK);
  CHECK(out == std::vector<int>{1, 2, 1, 3});

  char buf[4];
  CHECK(lm_render_prose(p, buf, sizeof buf, &needed) == LM_ERR_BUFFER_TOO_SMALL);
  std::string text(needed, '\0');
  CHECK(lm_render_prose(p, text.data(), text.size(), &needed) == LM_OK);
  CHECK(std::string(text.c_str()) == "la lala la lalala\n");
  lm_prose_free(p);
}

TEST_CASE("spectrum and histogram") {
  const int counts[] = {1, 2, 1};
  lm_prose* p = nullptr;
  REQUIRE(lm_prose_from_counts(counts, 3, &p) == LM_OK);
  uint64_t L[4];
  double Q[4];
  CHECK(lm_compute_q(p, 4, L, Q, 3) == LM_ERR_BUFFER_TOO_SMALL);
  REQUIRE(lm_compute_q(p, 4, L, Q, 4) == LM_OK);
  CHECK(L[3] == 3);
  CHECK(Q[0] == doctest::Approx(2.0 / 3));
  CHECK(Q[3] == 1.0);

  lm_histogram* h = nullptr;
  REQUIRE(lm_histogram_from_prose(p, &h) == LM_OK);
  double v = 0;
  CHECK(lm_internal_boundary_proportion(h, &v) == LM_OK);
  CHECK(v == doctest::Approx(0.25));
  CHECK(lm_histogram_mean_length(h, &v) == LM_OK);
  CHECK(v == doctest::Approx(4.0 / 3));
  lm_histogram_free(h);

  lm_transition_info info{};
  size_t needed = 0;
  CHECK(lm_transition_matrix(p, &info, nullptr, nullptr, 0, &needed) ==
        LM_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == 4);
  std::vector<uint64_t> bi(needed);
  std::vector<double> pr(needed);
  CHECK(lm_transition_matrix(p, &info, bi.data(), pr.data(), needed, &needed) == LM_OK);
  CHECK(info.max_length == 2);
  lm_prose_free(p);

  REQUIRE(lm_histogram_load((kData + "/fixtures/novel_word_lengths.tsv").c_str(), &h) == LM_OK);
  uint64_t words = 0;
  CHECK(lm_histogram_words(h, &words) == LM_OK);
  CHECK(words == 317826);
  CHECK(lm_fit_geometric(h, &v) == LM_OK);
  CHECK(std::abs(v - 0.696054) < 1e-6);
  lm_histogram_free(h);

  const uint64_t empty[] = {0, 0};
  CHECK(lm_histogram_from_counts(empty, 2, &h) == LM_OK);
  CHECK(lm_histogram_mean_length(h, &v) == LM_ERR_EMPTY_CORPUS);
  lm_histogram_free(h);

  std::vector<double> flat(30, 0.7);
  lm_peak peak{};
  CHECK(lm_peak_significance(flat.data(), flat.size(), 10, &peak) == LM_OK);
  CHECK(peak.degenerate == 1);
  CHECK(lm_peak_significance(flat.data(), flat.size(), 20, &peak) == LM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verse statistics") {
  const int counts[] = {2, 2, 1, 2, 1, 5, 6};
  const size_t sizes[] = {2, 3, 2};
  lm_verse* v = nullptr;
  REQUIRE(lm_verse_from_counts(counts, sizes, 3, &v) == LM_OK);
  size_t n = 0;
  CHECK(lm_verse_line_count(v, &n) == LM_OK);
  CHECK(n == 3);

  lm_profile_info info{};
  size_t needed = 0;
  CHECK(lm_line_profile(v, &info, nullptr, nullptr, 0, &needed) == LM_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == 2);
  int lengths[2];
  uint64_t lc[2];
  CHECK(lm_line_profile(v, &info, lengths, lc, 2, &needed) == LM_OK);
  CHECK(info.core_length == 4);
  CHECK(info.variant_count == 1);
  CHECK(lengths[1] == 11);

  double x[4];
  uint64_t lines = 0;
  CHECK(lm_compute_x(v, 4, x, 4, &lines) == LM_OK);
  CHECK(lines == 2);
  CHECK(x[0] == 0.5);
  CHECK(x[3] == 1.0);
  CHECK(lm_compute_x(v, 7, x, 4, &lines) != LM_OK);

  lm_prose* s = nullptr;
  REQUIRE(lm_verse_stream(v, &s) == LM_OK);
  uint64_t syl = 0;
  CHECK(lm_prose_syllables(s, &syl) == LM_OK);
  CHECK(syl == 19);
  lm_violations viol{};
  CHECK(lm_theoretical_violations(s, 4, &viol) == LM_OK);
  CHECK(viol.cuts == 4);
  CHECK(lm_theoretical_violations(s, 40, &viol) == LM_ERR_DOMAIN);
  lm_vary_up_info vu{};
  CHECK(lm_vary_up(s, 4, &vu, nullptr, nullptr, 0, &needed) == LM_ERR_BUFFER_TOO_SMALL);
  lm_prose_free(s);

  double e = 0;
  CHECK(lm_expected_violations(456620, 0.3, 10, &e) == LM_OK);
  CHECK(std::llround(e) == 13699);
  CHECK(lm_expected_violations(456620, 1.3, 10, &e) == LM_ERR_INVALID_ARGUMENT);
  CHECK(lm_expected_violations(5, 0.3, 10, &e) == LM_ERR_DOMAIN);

  const double alt[] = {.8, .6, .8, .6, .8, .6, .8, .6, .8, 1};
  CHECK(lm_alternation_index(alt, 10, &e) == LM_OK);
  CHECK(e == doctest::Approx(0.2));

  int cls[2];
  double means[2];
  CHECK(lm_mean_word_length_by_class(v, cls, means, 2, &needed) == LM_OK);
  CHECK(means[0] == doctest::Approx(8.0 / 5));
  lm_verse_free(v);

  const int ll[] = {10, 11, 12};
  const uint64_t lcnt[] = {6, 3, 1};
  const uint64_t wc[] = {6, 3, 1};
  lm_histogram* h = nullptr;
  REQUIRE(lm_histogram_from_counts(wc, 3, &h) == LM_OK);
  double tv = 1;
  lm_aligned_row rows[8];
  CHECK(lm_profile_vs_word_lengths(ll, lcnt, 3, 10, h, 0, rows, 8, &needed, &tv) == LM_OK);
  CHECK(tv == doctest::Approx(0.0));
  CHECK(lm_variant_ratio(ll, lcnt, 3, h, 100, &e) == LM_OK);
  // 4 variants against 10 cuts at internal proportion 5/15.
  CHECK(e == doctest::Approx(4.0 / (10.0 / 3)));
  lm_histogram_free(h);
}

TEST_CASE("induced spectrum and models") {
  const double x[] = {0.5, 0.5, 0.5, 1.0};
  double q[4], q2[4], X = 0, X2 = 0;
  CHECK(lm_induced_q(x, 4, q, &X) == LM_OK);
  CHECK(lm_induced_q_via_gf(x, 4, q2, &X2) == LM_OK);
  CHECK(X == 2.5);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(q[i] - q2[i]) < 1e-12);
  CHECK(q[0] == doctest::Approx(0.6));
  const double bad[] = {0.5, 0.9};
  CHECK(lm_induced_q(bad, 2, q, &X) == LM_ERR_INVALID_ARGUMENT);

  lm_flat_q f{};
  CHECK(lm_flat_model(0.75, 10, nullptr, nullptr, &f) == LM_OK);
  CHECK(std::abs(f.peak_excess - 0.00806452) < 1e-8);
  lm_osc_q o{};
  CHECK(lm_osc_model(0.8, 0.6, 10, nullptr, nullptr, &o) == LM_OK);
  CHECK(std::abs(o.even_minus_odd - 0.00540541) < 1e-8);
  CHECK(lm_osc_model(0.8, 0.6, 9, nullptr, nullptr, &o) == LM_ERR_INVALID_ARGUMENT);

  size_t needed = 0;
  lm_delta_summary sum{};
  CHECK(lm_delta_grid(10, 0.01, 1, 0.01, 1, 50, nullptr, 0, &needed, &sum) ==
        LM_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == 2500);
  std::vector<lm_delta_cell> cells(needed);
  CHECK(lm_delta_grid(10, 0.01, 1, 0.01, 1, 50, cells.data(), needed, &needed, &sum) == LM_OK);
  CHECK(sum.negative_even_minus_odd > 0);

  lm_property_result res[5];
  CHECK(lm_verify_properties(x, 4, 1e-12, res, 5, &needed) == LM_OK);
  CHECK(needed == 5);
  for (const auto& r : res) CHECK(r.ok == 1);
  CHECK(std::string(res[0].name) == "periodicity");
}

TEST_CASE("synthetic corpora through the C interface") {
  lm_prose* p = nullptr;
  REQUIRE(lm_gen_geometric_prose(0.7, 1000, 42, &p) == LM_OK);
  uint64_t w = 0;
  CHECK(lm_prose_words(p, &w) == LM_OK);
  CHECK(w == 1000);
  lm_prose_free(p);
  CHECK(lm_gen_geometric_prose(0.0, 1000, 42, &p) == LM_ERR_INVALID_ARGUMENT);

  lm_flat_q f{};
  double x[10];
  REQUIRE(lm_flat_model(0.75, 10, x, nullptr, &f) == LM_OK);
  lm_verse* v = nullptr;
  REQUIRE(lm_gen_lines_from_x(x, 10, 20000, 7, &v) == LM_OK);
  lm_comparison_info info{};
  CHECK(lm_measured_vs_induced(v, 30, &info, nullptr, 0, nullptr, nullptr, 0) == LM_OK);
  CHECK(info.core_length == 10);
  double tiny[2];
  CHECK(lm_measured_vs_induced(v, 30, &info, tiny, 2, nullptr, nullptr, 0) ==
        LM_ERR_BUFFER_TOO_SMALL);
  std::vector<double> xs(10), meas(30), ind(30);
  CHECK(lm_measured_vs_induced(v, 30, &info, xs.data(), 10, meas.data(), ind.data(), 30) ==
        LM_OK);
  CHECK(info.core_length == 10);
  CHECK(info.core_lines == 20000);
  CHECK(info.rmse < 0.01);
  CHECK(info.induced_argmax == 10);

  size_t needed = 0;
  CHECK(lm_render_verse(v, nullptr, 0, &needed) == LM_ERR_BUFFER_TOO_SMALL);
  std::string text(needed, '\0');
  CHECK(lm_render_verse(v, text.data(), needed, &needed) == LM_OK);
  lm_lexicon* lex = nullptr;
  REQUIRE(lm_lexicon_new(&lex) == LM_OK);
  lm_verse* back = nullptr;
  REQUIRE(lm_verse_from_text(lex, text.c_str(), needed - 1, &back) == LM_OK);
  size_t n = 0;
  CHECK(lm_verse_line_count(back, &n) == LM_OK);
  CHECK(n == 20000);
  lm_verse_free(back);
  lm_verse_free(v);
  lm_lexicon_free(lex);
}
