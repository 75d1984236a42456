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

#include "lineametrics/lineametrics.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "lineametrics/corpus.hpp"
#include "lineametrics/digest.hpp"
#include "lineametrics/error.hpp"
#include "lineametrics/induced.hpp"
#include "lineametrics/linestats.hpp"
#include "lineametrics/qstats.hpp"
#include "lineametrics/synth.hpp"
#include "lineametrics/syllabifier.hpp"

struct lm_lexicon {
  lineametrics::SyllableLexicon impl;
};
struct lm_prose {
  lineametrics::ProseDocument impl;
};
struct lm_verse {
  lineametrics::VerseDocument impl;
};
struct lm_histogram {
  lineametrics::WordLengthHistogram impl;
};

namespace {

namespace lm = lineametrics;

thread_local std::string g_last_error;

lm_status fail(lm_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

lm_status map_kind(lm::ErrorKind kind) {
  switch (kind) {
    case lm::ErrorKind::kInvalidArgument: return LM_ERR_INVALID_ARGUMENT;
    case lm::ErrorKind::kIo: return LM_ERR_IO;
    case lm::ErrorKind::kEmptyCorpus: return LM_ERR_EMPTY_CORPUS;
    case lm::ErrorKind::kDomain: return LM_ERR_DOMAIN;
  }
  return LM_ERR_INTERNAL;
}

// Runs fn and converts any exception into a status.
template <typename Fn>
lm_status guard(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const lm::Error& e) {
    return fail(map_kind(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LM_ERR_INTERNAL, "unknown error");
  }
}

#define LM_REQUIRE(cond)                                                    \
  do {                                                                      \
    if (!(cond)) return fail(LM_ERR_INVALID_ARGUMENT, "null or bad argument: " #cond); \
  } while (0)

// Size check for the caller-buffer convention.
bool fits(std::size_t want, std::size_t capacity, std::size_t* needed) {
  if (needed) *needed = want;
  return capacity >= want;
}

lm_status too_small(std::size_t want) {
  return fail(LM_ERR_BUFFER_TOO_SMALL,
              "buffer too small; need " + std::to_string(want) + " elements");
}

void copy_hex(const std::string& hex, char out[65]) {
  std::memcpy(out, hex.data(), 64);
  out[64] = '\0';
}

lm_status copy_string(const std::string& s, char* buffer, std::size_t capacity,
                      std::size_t* needed) {
  if (!fits(s.size() + 1, capacity, needed)) return too_small(s.size() + 1);
  if (!buffer) return fail(LM_ERR_INVALID_ARGUMENT, "null buffer");
  std::memcpy(buffer, s.data(), s.size());
  buffer[s.size()] = '\0';
  return LM_OK;
}

lm::XDistribution x_from(const double* x, int length) {
  if (!x || length < 1) throw lm::Error(lm::ErrorKind::kInvalidArgument, "bad x array");
  return lm::XDistribution::from_values(std::vector<double>(x, x + length));
}

lm::LengthHistogram lengths_from(const int* lengths, const std::uint64_t* counts,
                                 std::size_t entries) {
  if (entries > 0 && (!lengths || !counts))
    throw lm::Error(lm::ErrorKind::kInvalidArgument, "null histogram arrays");
  lm::LengthHistogram h;
  for (std::size_t i = 0; i < entries; ++i) {
    if (lengths[i] < 1)
      throw lm::Error(lm::ErrorKind::kInvalidArgument, "line length must be >= 1");
    h[lengths[i]] += counts[i];
  }
  return h;
}

template <typename Map, typename K, typename V>
lm_status copy_map(const Map& m, K* keys, V* values, std::size_t capacity,
                   std::size_t* needed) {
  if (!fits(m.size(), capacity, needed)) return too_small(m.size());
  if (m.size() > 0 && (!keys || !values)) return fail(LM_ERR_INVALID_ARGUMENT, "null buffer");
  std::size_t i = 0;
  for (const auto& [k, v] : m) {
    keys[i] = static_cast<K>(k);
    values[i] = static_cast<V>(v);
    ++i;
  }
  return LM_OK;
}

}  // namespace

extern "C" {

const char* lm_last_error(void) { return g_last_error.c_str(); }

const char* lm_status_name(lm_status status) {
  switch (status) {
    case LM_OK: return "ok";
    case LM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LM_ERR_IO: return "i/o error";
    case LM_ERR_EMPTY_CORPUS: return "empty corpus";
    case LM_ERR_DOMAIN: return "domain error";
    case LM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case LM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

lm_status lm_sha256_hex(const void* data, size_t size, char out[65]) {
  return guard([&] {
    LM_REQUIRE(out && (data || size == 0));
    copy_hex(lm::sha256_hex(std::string_view(static_cast<const char*>(data), size)), out);
    return LM_OK;
  });
}

lm_status lm_sha256_file(const char* path, char out[65]) {
  return guard([&] {
    LM_REQUIRE(path && out);
    copy_hex(lm::sha256_file(path), out);
    return LM_OK;
  });
}

// ---- syllabifier ----

lm_status lm_lexicon_new(lm_lexicon** out) {
  return guard([&] {
    LM_REQUIRE(out);
    *out = new lm_lexicon{};
    return LM_OK;
  });
}

lm_status lm_lexicon_load(const char* path, lm_lexicon** out) {
  return guard([&] {
    LM_REQUIRE(path && out);
    *out = new lm_lexicon{lm::SyllableLexicon::load(path)};
    return LM_OK;
  });
}

void lm_lexicon_free(lm_lexicon* lexicon) { delete lexicon; }

lm_status lm_lexicon_size(const lm_lexicon* lexicon, size_t* out) {
  return guard([&] {
    LM_REQUIRE(lexicon && out);
    *out = lexicon->impl.size();
    return LM_OK;
  });
}

lm_status lm_lexicon_digest(const lm_lexicon* lexicon, char out[65]) {
  return guard([&] {
    LM_REQUIRE(lexicon && out);
    copy_hex(lexicon->impl.digest(), out);
    return LM_OK;
  });
}

lm_status lm_count_syllables(const lm_lexicon* lexicon, const char* word, int* syllables,
                             int* from_lexicon) {
  return guard([&] {
    LM_REQUIRE(lexicon && word && syllables);
    const auto t = lm::count_syllables(word, lexicon->impl);
    *syllables = t.syllables;
    if (from_lexicon) *from_lexicon = t.provenance == lm::Provenance::kLexicon ? 1 : 0;
    return LM_OK;
  });
}

lm_status lm_heuristic_syllables(const char* word, int* syllables) {
  return guard([&] {
    LM_REQUIRE(word && syllables);
    *syllables = lm::heuristic_syllables(word);
    return LM_OK;
  });
}

lm_status lm_write_unknown_report(const lm_lexicon* lexicon, const char* text, size_t size,
                                  const char* path, size_t* unknown_types) {
  return guard([&] {
    LM_REQUIRE(lexicon && (text || size == 0) && path);
    const auto s = lm::syllabify_text(std::string_view(text, size), lexicon->impl);
    std::ofstream out(path, std::ios::binary);
    if (!out) return fail(LM_ERR_IO, std::string("cannot write ") + path);
    lm::write_unknown_report(out, s.unknown);
    if (!out.flush()) return fail(LM_ERR_IO, std::string("write failed: ") + path);
    if (unknown_types) *unknown_types = s.unknown.size();
    return LM_OK;
  });
}

// ---- documents ----

lm_status lm_prose_from_counts(const int* counts, size_t words, lm_prose** out) {
  return guard([&] {
    LM_REQUIRE(out && (counts || words == 0));
    *out = new lm_prose{lm::ProseDocument(std::vector<int>(counts, counts + words))};
    return LM_OK;
  });
}

lm_status lm_prose_from_text(const lm_lexicon* lexicon, const char* text, size_t size,
                             lm_prose** out) {
  return guard([&] {
    LM_REQUIRE(lexicon && out && (text || size == 0));
    *out = new lm_prose{lm::prose_from_text(std::string_view(text, size), lexicon->impl)};
    return LM_OK;
  });
}

lm_status lm_prose_load(const lm_lexicon* lexicon, const char* path, lm_prose** out) {
  return guard([&] {
    LM_REQUIRE(lexicon && path && out);
    *out = new lm_prose{lm::load_prose(path, lexicon->impl)};
    return LM_OK;
  });
}

void lm_prose_free(lm_prose* prose) { delete prose; }

lm_status lm_prose_words(const lm_prose* prose, uint64_t* out) {
  return guard([&] {
    LM_REQUIRE(prose && out);
    *out = prose->impl.words();
    return LM_OK;
  });
}

lm_status lm_prose_syllables(const lm_prose* prose, uint64_t* out) {
  return guard([&] {
    LM_REQUIRE(prose && out);
    *out = prose->impl.syllables();
    return LM_OK;
  });
}

lm_status lm_prose_counts(const lm_prose* prose, int* buffer, size_t capacity,
                          size_t* needed) {
  return guard([&] {
    LM_REQUIRE(prose);
    const auto c = prose->impl.counts();
    if (!fits(c.size(), capacity, needed)) return too_small(c.size());
    LM_REQUIRE(buffer || c.empty());
    std::copy(c.begin(), c.end(), buffer);
    return LM_OK;
  });
}

lm_status lm_verse_from_counts(const int* counts, const size_t* line_sizes, size_t lines,
                               lm_verse** out) {
  return guard([&] {
    LM_REQUIRE(out && (line_sizes || lines == 0));
    std::vector<lm::LineRecord> recs;
    recs.reserve(lines);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < lines; ++i) {
      LM_REQUIRE(counts || line_sizes[i] == 0);
      lm::LineRecord r;
      r.word_counts.assign(counts + pos, counts + pos + line_sizes[i]);
      pos += line_sizes[i];
      recs.push_back(std::move(r));
    }
    *out = new lm_verse{lm::VerseDocument(std::move(recs))};
    return LM_OK;
  });
}

lm_status lm_verse_from_text(const lm_lexicon* lexicon, const char* text, size_t size,
                             lm_verse** out) {
  return guard([&] {
    LM_REQUIRE(lexicon && out && (text || size == 0));
    *out = new lm_verse{lm::verse_from_text(std::string_view(text, size), lexicon->impl)};
    return LM_OK;
  });
}

lm_status lm_verse_load(const lm_lexicon* lexicon, const char* path, lm_verse** out) {
  return guard([&] {
    LM_REQUIRE(lexicon && path && out);
    *out = new lm_verse{lm::load_verse(path, lexicon->impl)};
    return LM_OK;
  });
}

void lm_verse_free(lm_verse* verse) { delete verse; }

lm_status lm_verse_line_count(const lm_verse* verse, size_t* out) {
  return guard([&] {
    LM_REQUIRE(verse && out);
    *out = verse->impl.line_count();
    return LM_OK;
  });
}

lm_status lm_verse_line_lengths(const lm_verse* verse, int* buffer, size_t capacity,
                                size_t* needed) {
  return guard([&] {
    LM_REQUIRE(verse);
    const auto& lines = verse->impl.lines();
    if (!fits(lines.size(), capacity, needed)) return too_small(lines.size());
    LM_REQUIRE(buffer || lines.empty());
    for (std::size_t i = 0; i < lines.size(); ++i) buffer[i] = lines[i].length();
    return LM_OK;
  });
}

lm_status lm_verse_stream(const lm_verse* verse, lm_prose** out) {
  return guard([&] {
    LM_REQUIRE(verse && out);
    *out = new lm_prose{verse->impl.stream()};
    return LM_OK;
  });
}

lm_status lm_histogram_from_counts(const uint64_t* counts, size_t max_length,
                                   lm_histogram** out) {
  return guard([&] {
    LM_REQUIRE(out && (counts || max_length == 0));
    *out = new lm_histogram{
        lm::WordLengthHistogram(std::vector<std::uint64_t>(counts, counts + max_length))};
    return LM_OK;
  });
}

lm_status lm_histogram_from_prose(const lm_prose* prose, lm_histogram** out) {
  return guard([&] {
    LM_REQUIRE(prose && out);
    *out = new lm_histogram{lm::word_length_histogram(prose->impl)};
    return LM_OK;
  });
}

lm_status lm_histogram_load(const char* path, lm_histogram** out) {
  return guard([&] {
    LM_REQUIRE(path && out);
    *out = new lm_histogram{lm::WordLengthHistogram::load(path)};
    return LM_OK;
  });
}

void lm_histogram_free(lm_histogram* hist) { delete hist; }

lm_status lm_histogram_max_length(const lm_histogram* hist, size_t* out) {
  return guard([&] {
    LM_REQUIRE(hist && out);
    *out = hist->impl.max_length();
    return LM_OK;
  });
}

lm_status lm_histogram_count(const lm_histogram* hist, int length, uint64_t* out) {
  return guard([&] {
    LM_REQUIRE(hist && out);
    *out = hist->impl.count(length);
    return LM_OK;
  });
}

lm_status lm_histogram_words(const lm_histogram* hist, uint64_t* out) {
  return guard([&] {
    LM_REQUIRE(hist && out);
    *out = hist->impl.words();
    return LM_OK;
  });
}

lm_status lm_histogram_syllables(const lm_histogram* hist, uint64_t* out) {
  return guard([&] {
    LM_REQUIRE(hist && out);
    *out = hist->impl.syllables();
    return LM_OK;
  });
}

lm_status lm_histogram_frequency(const lm_histogram* hist, int length, double* out) {
  return guard([&] {
    LM_REQUIRE(hist && out);
    *out = hist->impl.frequency(length);
    return LM_OK;
  });
}

lm_status lm_histogram_mean_length(const lm_histogram* hist, double* out) {
  return guard([&] {
    LM_REQUIRE(hist && out);
    *out = hist->impl.mean_length();
    return LM_OK;
  });
}

// ---- word-boundary spectrum ----

lm_status lm_compute_q(const lm_prose* prose, int n_max, uint64_t* matches, double* values,
                       size_t capacity) {
  return guard([&] {
    LM_REQUIRE(prose);
    const auto q = lm::compute_q(prose->impl, n_max);
    if (capacity < q.matches.size()) return too_small(q.matches.size());
    if (matches) std::copy(q.matches.begin(), q.matches.end(), matches);
    if (values) std::copy(q.values.begin(), q.values.end(), values);
    return LM_OK;
  });
}

lm_status lm_internal_boundary_proportion(const lm_histogram* hist, double* out) {
  return guard([&] {
    LM_REQUIRE(hist && out);
    *out = lm::internal_boundary_proportion(hist->impl);
    return LM_OK;
  });
}

lm_status lm_fit_geometric(const lm_histogram* hist, double* q) {
  return guard([&] {
    LM_REQUIRE(hist && q);
    *q = lm::fit_geometric(hist->impl).q;
    return LM_OK;
  });
}

lm_status lm_transition_matrix(const lm_prose* prose, lm_transition_info* info,
                               uint64_t* bigrams, double* probabilities, size_t capacity,
                               size_t* needed) {
  return guard([&] {
    LM_REQUIRE(prose);
    const auto tm = lm::transition_matrix(prose->impl);
    if (info) {
      info->max_length = tm.max_length;
      info->correlation = tm.correlation;
      info->degenerate = tm.degenerate ? 1 : 0;
    }
    if (!fits(tm.bigrams.size(), capacity, needed)) return too_small(tm.bigrams.size());
    if (bigrams) std::copy(tm.bigrams.begin(), tm.bigrams.end(), bigrams);
    if (probabilities)
      std::copy(tm.probabilities.begin(), tm.probabilities.end(), probabilities);
    return LM_OK;
  });
}

lm_status lm_peak_significance(const double* q_values, size_t n_max, int core_length,
                               lm_peak* out) {
  return guard([&] {
    LM_REQUIRE(q_values && out);
    lm::QDistribution q;
    q.values.assign(q_values, q_values + n_max);
    const auto p = lm::peak_significance(q, core_length);
    *out = lm_peak{p.z, p.baseline_mean, p.baseline_sd, p.degenerate ? 1 : 0};
    return LM_OK;
  });
}

// ---- line statistics ----

lm_status lm_line_profile(const lm_verse* verse, lm_profile_info* info, int* lengths,
                          uint64_t* counts, size_t capacity, size_t* needed) {
  return guard([&] {
    LM_REQUIRE(verse);
    const auto p = lm::line_length_profile(verse->impl);
    if (info) *info = lm_profile_info{p.core_length, p.total_lines, p.variant_count};
    return copy_map(p.histogram, lengths, counts, capacity, needed);
  });
}

lm_status lm_compute_x(const lm_verse* verse, int length, double* x, size_t capacity,
                       uint64_t* line_count) {
  return guard([&] {
    LM_REQUIRE(verse);
    const auto xd = lm::compute_x(verse->impl, length);
    if (capacity < xd.values.size()) return too_small(xd.values.size());
    if (x) std::copy(xd.values.begin(), xd.values.end(), x);
    if (line_count) *line_count = xd.line_count;
    return LM_OK;
  });
}

lm_status lm_alternation_index(const double* x, int length, double* out) {
  return guard([&] {
    LM_REQUIRE(out);
    *out = lm::alternation_index(x_from(x, length));
    return LM_OK;
  });
}

lm_status lm_theoretical_violations(const lm_prose* prose, int length, lm_violations* out) {
  return guard([&] {
    LM_REQUIRE(prose && out);
    const auto v = lm::theoretical_violations(prose->impl, length);
    *out = lm_violations{v.length, v.cuts, v.exact, v.internal_proportion, v.expected};
    return LM_OK;
  });
}

lm_status lm_expected_violations(uint64_t syllables, double p_internal, int length,
                                 double* out) {
  return guard([&] {
    LM_REQUIRE(out);
    if (!(p_internal >= 0.0 && p_internal <= 1.0))
      return fail(LM_ERR_INVALID_ARGUMENT, "p_internal must lie in [0, 1]");
    if (syllables < static_cast<std::uint64_t>(std::max(length, 0)))
      return fail(LM_ERR_DOMAIN, "fewer syllables than one line");
    *out = lm::expected_violations(syllables, p_internal, length);
    return LM_OK;
  });
}

lm_status lm_vary_up(const lm_prose* prose, int length, lm_vary_up_info* info, int* lengths,
                     uint64_t* counts, size_t capacity, size_t* needed) {
  return guard([&] {
    LM_REQUIRE(prose);
    const auto v = lm::artificial_lineation_vary_up(prose->impl, length);
    if (info)
      *info = lm_vary_up_info{v.line_lengths.size(), v.trailing_syllables, v.trailing_words};
    return copy_map(v.histogram, lengths, counts, capacity, needed);
  });
}

lm_status lm_variant_ratio(const int* line_lengths, const uint64_t* line_counts,
                           size_t entries, const lm_histogram* prose_hist,
                           uint64_t verse_syllables, double* out) {
  return guard([&] {
    LM_REQUIRE(prose_hist && out);
    const auto profile =
        lm::VerseProfile::from_histogram(lengths_from(line_lengths, line_counts, entries));
    *out = lm::variant_ratio(profile, prose_hist->impl, verse_syllables);
    return LM_OK;
  });
}

lm_status lm_profile_vs_word_lengths(const int* line_lengths, const uint64_t* line_counts,
                                     size_t entries, int core_length,
                                     const lm_histogram* words, int shift,
                                     lm_aligned_row* rows, size_t capacity, size_t* needed,
                                     double* tv_distance) {
  return guard([&] {
    LM_REQUIRE(words);
    const auto cmp = lm::profile_vs_word_lengths(
        lengths_from(line_lengths, line_counts, entries), core_length, words->impl, shift);
    if (tv_distance) *tv_distance = cmp.tv_distance;
    if (!fits(cmp.rows.size(), capacity, needed)) return too_small(cmp.rows.size());
    if (rows)
      for (std::size_t i = 0; i < cmp.rows.size(); ++i) {
        const auto& r = cmp.rows[i];
        rows[i] = lm_aligned_row{r.line_length, r.word_length, r.line_share, r.word_share};
      }
    return LM_OK;
  });
}

lm_status lm_mean_word_length_by_class(const lm_verse* verse, int* lengths, double* means,
                                       size_t capacity, size_t* needed) {
  return guard([&] {
    LM_REQUIRE(verse);
    return copy_map(lm::mean_word_length_by_class(verse->impl), lengths, means, capacity,
                    needed);
  });
}

// ---- induced spectrum and line models ----

namespace {

lm_status write_induced(const lm::InducedQ& q, double* out, double* x_total) {
  if (out) std::copy(q.values.begin(), q.values.end(), out);
  if (x_total) *x_total = q.x_total;
  return LM_OK;
}

}  // namespace

lm_status lm_induced_q(const double* x, int length, double* q, double* x_total) {
  return guard([&] { return write_induced(lm::induced_q(x_from(x, length)), q, x_total); });
}

lm_status lm_induced_q_via_gf(const double* x, int length, double* q, double* x_total) {
  return guard(
      [&] { return write_induced(lm::induced_q_via_gf(x_from(x, length)), q, x_total); });
}

lm_status lm_flat_model(double alpha, int length, double* x, double* q, lm_flat_q* out) {
  return guard([&] {
    const lm::FlatModelParams p{alpha, length};
    const auto xd = lm::flat_model_x(p);
    const auto m = lm::flat_model_q_closed(p);
    if (x) std::copy(xd.values.begin(), xd.values.end(), x);
    if (q) std::copy(m.q.values.begin(), m.q.values.end(), q);
    if (out) *out = lm_flat_q{m.q_inner, m.q_peak, m.peak_excess, m.mean, m.q.x_total};
    return LM_OK;
  });
}

lm_status lm_osc_model(double alpha, double beta, int length, double* x, double* q,
                       lm_osc_q* out) {
  return guard([&] {
    const lm::OscModelParams p{alpha, beta, length};
    const auto xd = lm::osc_model_x(p);
    const auto m = lm::osc_model_q_closed(p);
    if (x) std::copy(xd.values.begin(), xd.values.end(), x);
    if (q) std::copy(m.q.values.begin(), m.q.values.end(), q);
    if (out)
      *out = lm_osc_q{m.q_odd,           m.q_even, m.q_peak,   m.even_minus_odd,
                      m.peak_minus_even, m.mean,   m.q.x_total};
    return LM_OK;
  });
}

lm_status lm_delta_grid(int length, double alpha_lo, double alpha_hi, double beta_lo,
                        double beta_hi, int steps, lm_delta_cell* cells, size_t capacity,
                        size_t* needed, lm_delta_summary* summary) {
  return guard([&] {
    if (steps >= 2) {
      const auto want = static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps);
      if (!fits(want, capacity, needed)) return too_small(want);
    }
    const auto g = lm::delta_contour_grid(length, alpha_lo, alpha_hi, beta_lo, beta_hi, steps);
    if (cells)
      for (std::size_t i = 0; i < g.cells.size(); ++i) {
        const auto& c = g.cells[i];
        cells[i] = lm_delta_cell{c.alpha, c.beta, c.even_minus_odd, c.peak_minus_even};
      }
    if (summary)
      *summary = lm_delta_summary{g.negative_even_minus_odd, g.min_even_minus_odd,
                                  g.max_even_minus_odd, g.min_peak_minus_even,
                                  g.max_peak_minus_even};
    return LM_OK;
  });
}

lm_status lm_verify_properties(const double* x, int length, double tolerance,
                               lm_property_result* results, size_t capacity,
                               size_t* needed) {
  return guard([&] {
    const auto r = lm::verify_properties(x_from(x, length), tolerance);
    if (!fits(r.checks.size(), capacity, needed)) return too_small(r.checks.size());
    LM_REQUIRE(results);
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      const auto& c = r.checks[i];
      lm_property_result& o = results[i];
      std::memset(o.name, 0, sizeof o.name);
      std::strncpy(o.name, c.name.c_str(), sizeof o.name - 1);
      o.ok = c.ok ? 1 : 0;
      o.violating_n = c.violating_n;
      o.max_error = c.max_error;
    }
    return LM_OK;
  });
}

lm_status lm_measured_vs_induced(const lm_verse* verse, int n_max, lm_comparison_info* info,
                                 double* x, size_t x_capacity, double* measured,
                                 double* induced, size_t q_capacity) {
  return guard([&] {
    LM_REQUIRE(verse);
    const auto c = lm::measured_vs_induced(verse->impl, n_max);
    if (info)
      *info = lm_comparison_info{c.core_length, c.x.line_count, c.rmse, c.measured_argmax,
                                 c.induced_argmax};
    if (x) {
      if (x_capacity < c.x.values.size()) return too_small(c.x.values.size());
      std::copy(c.x.values.begin(), c.x.values.end(), x);
    }
    if (measured || induced) {
      const auto n = static_cast<std::size_t>(n_max);
      if (q_capacity < n) return too_small(n);
      if (measured) std::copy(c.measured.values.begin(), c.measured.values.end(), measured);
      if (induced)
        std::copy(c.induced_extended.begin(), c.induced_extended.end(), induced);
    }
    return LM_OK;
  });
}

// ---- synthetic corpora ----

lm_status lm_gen_geometric_prose(double q, uint64_t words, uint64_t seed, lm_prose** out) {
  return guard([&] {
    LM_REQUIRE(out);
    *out = new lm_prose{lm::gen_geometric_prose(q, words, seed)};
    return LM_OK;
  });
}

lm_status lm_gen_lines_from_x(const double* x, int length, uint64_t lines, uint64_t seed,
                              lm_verse** out) {
  return guard([&] {
    LM_REQUIRE(out);
    *out = new lm_verse{lm::gen_lines_from_x(x_from(x, length), lines, seed)};
    return LM_OK;
  });
}

lm_status lm_render_prose(const lm_prose* prose, char* buffer, size_t capacity,
                          size_t* needed) {
  return guard([&] {
    LM_REQUIRE(prose);
    return copy_string(lm::render_prose(prose->impl), buffer, capacity, needed);
  });
}

lm_status lm_render_verse(const lm_verse* verse, char* buffer, size_t capacity,
                          size_t* needed) {
  return guard([&] {
    LM_REQUIRE(verse);
    return copy_string(lm::render_verse(verse->impl), buffer, capacity, needed);
  });
}

}  // extern "C"
