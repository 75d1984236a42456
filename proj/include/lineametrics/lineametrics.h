/* Copyright 2026 The lineametrics Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to liblineametrics.
 *
 * Every function returns an lm_status. On failure a message is available
 * from lm_last_error() on the calling thread until its next call into the
 * library.
 *
 * Variable-length results go into caller buffers: pass the capacity in
 * elements and a `needed` out-parameter. If the capacity is too small the
 * call stores the required size in *needed, writes nothing else and
 * returns LM_ERR_BUFFER_TOO_SMALL. Passing a null buffer with capacity 0 is
 * the usual way to query the size. Strings count their terminating NUL.
 *
 * Handles are opaque; each *_free accepts NULL.
 */

#ifndef LINEAMETRICS_H_
#define LINEAMETRICS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LM_API __declspec(dllexport)
#else
#define LM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lm_status {
  LM_OK = 0,
  LM_ERR_INVALID_ARGUMENT = 1,
  LM_ERR_IO = 2,
  LM_ERR_EMPTY_CORPUS = 3,
  LM_ERR_DOMAIN = 4,
  LM_ERR_BUFFER_TOO_SMALL = 5,
  LM_ERR_INTERNAL = 6
} lm_status;

typedef struct lm_lexicon lm_lexicon;
typedef struct lm_prose lm_prose;
typedef struct lm_verse lm_verse;
typedef struct lm_histogram lm_histogram;

LM_API const char* lm_last_error(void);
LM_API const char* lm_status_name(lm_status status);

/* ---- digests ---- */

/* out receives 64 hex characters and a NUL. */
LM_API lm_status lm_sha256_hex(const void* data, size_t size, char out[65]);
LM_API lm_status lm_sha256_file(const char* path, char out[65]);

/* ---- syllabifier ---- */

/* An empty lexicon leaves every word to the heuristic. */
LM_API lm_status lm_lexicon_new(lm_lexicon** out);
LM_API lm_status lm_lexicon_load(const char* path, lm_lexicon** out);
LM_API void lm_lexicon_free(lm_lexicon* lexicon);
LM_API lm_status lm_lexicon_size(const lm_lexicon* lexicon, size_t* out);
LM_API lm_status lm_lexicon_digest(const lm_lexicon* lexicon, char out[65]);

/* *from_lexicon is set to 1 when the lexicon supplied the count. */
LM_API lm_status lm_count_syllables(const lm_lexicon* lexicon, const char* word,
                                    int* syllables, int* from_lexicon);
LM_API lm_status lm_heuristic_syllables(const char* word, int* syllables);

/* Writes the words of `text` that fell back to the heuristic as TSV. */
LM_API lm_status lm_write_unknown_report(const lm_lexicon* lexicon, const char* text,
                                         size_t size, const char* path,
                                         size_t* unknown_types);

/* ---- documents ---- */

LM_API lm_status lm_prose_from_counts(const int* counts, size_t words, lm_prose** out);
LM_API lm_status lm_prose_from_text(const lm_lexicon* lexicon, const char* text,
                                    size_t size, lm_prose** out);
LM_API lm_status lm_prose_load(const lm_lexicon* lexicon, const char* path,
                               lm_prose** out);
LM_API void lm_prose_free(lm_prose* prose);
LM_API lm_status lm_prose_words(const lm_prose* prose, uint64_t* out);
LM_API lm_status lm_prose_syllables(const lm_prose* prose, uint64_t* out);
LM_API lm_status lm_prose_counts(const lm_prose* prose, int* buffer, size_t capacity,
                                 size_t* needed);

/* line_sizes[i] words per line; counts holds all lines back to back. */
LM_API lm_status lm_verse_from_counts(const int* counts, const size_t* line_sizes,
                                      size_t lines, lm_verse** out);
LM_API lm_status lm_verse_from_text(const lm_lexicon* lexicon, const char* text,
                                    size_t size, lm_verse** out);
LM_API lm_status lm_verse_load(const lm_lexicon* lexicon, const char* path,
                               lm_verse** out);
LM_API void lm_verse_free(lm_verse* verse);
LM_API lm_status lm_verse_line_count(const lm_verse* verse, size_t* out);
/* Line lengths in syllables, in order. */
LM_API lm_status lm_verse_line_lengths(const lm_verse* verse, int* buffer,
                                       size_t capacity, size_t* needed);
/* New prose handle holding the lines concatenated. */
LM_API lm_status lm_verse_stream(const lm_verse* verse, lm_prose** out);

/* counts[n-1] = number of n-syllable words. */
LM_API lm_status lm_histogram_from_counts(const uint64_t* counts, size_t max_length,
                                          lm_histogram** out);
LM_API lm_status lm_histogram_from_prose(const lm_prose* prose, lm_histogram** out);
LM_API lm_status lm_histogram_load(const char* path, lm_histogram** out);
LM_API void lm_histogram_free(lm_histogram* hist);
LM_API lm_status lm_histogram_max_length(const lm_histogram* hist, size_t* out);
LM_API lm_status lm_histogram_count(const lm_histogram* hist, int length, uint64_t* out);
LM_API lm_status lm_histogram_words(const lm_histogram* hist, uint64_t* out);
LM_API lm_status lm_histogram_syllables(const lm_histogram* hist, uint64_t* out);
LM_API lm_status lm_histogram_frequency(const lm_histogram* hist, int length, double* out);
LM_API lm_status lm_histogram_mean_length(const lm_histogram* hist, double* out);

/* ---- word-boundary spectrum ---- */

/* matches[n-1] = L_n and values[n-1] = Q_n for n = 1..n_max; either buffer
 * may be NULL. capacity must be >= n_max. */
LM_API lm_status lm_compute_q(const lm_prose* prose, int n_max, uint64_t* matches,
                              double* values, size_t capacity);
LM_API lm_status lm_internal_boundary_proportion(const lm_histogram* hist, double* out);
LM_API lm_status lm_fit_geometric(const lm_histogram* hist, double* q);

typedef struct lm_transition_info {
  int max_length;
  double correlation;
  int degenerate;
} lm_transition_info;

/* Row-major [(m-1) * max_length + (n-1)]; needed = max_length^2. */
LM_API lm_status lm_transition_matrix(const lm_prose* prose, lm_transition_info* info,
                                      uint64_t* bigrams, double* probabilities,
                                      size_t capacity, size_t* needed);

typedef struct lm_peak {
  double z;
  double baseline_mean;
  double baseline_sd;
  int degenerate;
} lm_peak;

/* q_values[n-1] = Q_n for n = 1..n_max. */
LM_API lm_status lm_peak_significance(const double* q_values, size_t n_max,
                                      int core_length, lm_peak* out);

/* ---- line statistics ---- */

typedef struct lm_profile_info {
  int core_length;
  uint64_t total_lines;
  uint64_t variant_count;
} lm_profile_info;

/* Histogram as parallel arrays sorted by length. */
LM_API lm_status lm_line_profile(const lm_verse* verse, lm_profile_info* info,
                                 int* lengths, uint64_t* counts, size_t capacity,
                                 size_t* needed);

/* x receives x_1..x_N; capacity must be >= N. */
LM_API lm_status lm_compute_x(const lm_verse* verse, int length, double* x,
                              size_t capacity, uint64_t* line_count);
LM_API lm_status lm_alternation_index(const double* x, int length, double* out);

typedef struct lm_violations {
  int length;
  uint64_t cuts;
  uint64_t exact;
  double internal_proportion;
  double expected;
} lm_violations;

LM_API lm_status lm_theoretical_violations(const lm_prose* prose, int length,
                                           lm_violations* out);
LM_API lm_status lm_expected_violations(uint64_t syllables, double p_internal,
                                        int length, double* out);

typedef struct lm_vary_up_info {
  uint64_t lines;
  uint64_t trailing_syllables;
  uint64_t trailing_words;
} lm_vary_up_info;

LM_API lm_status lm_vary_up(const lm_prose* prose, int length, lm_vary_up_info* info,
                            int* lengths, uint64_t* counts, size_t capacity,
                            size_t* needed);

LM_API lm_status lm_variant_ratio(const int* line_lengths, const uint64_t* line_counts,
                                  size_t entries, const lm_histogram* prose_hist,
                                  uint64_t verse_syllables, double* out);

typedef struct lm_aligned_row {
  int line_length;
  int word_length;
  double line_share;
  double word_share;
} lm_aligned_row;

LM_API lm_status lm_profile_vs_word_lengths(const int* line_lengths,
                                            const uint64_t* line_counts, size_t entries,
                                            int core_length, const lm_histogram* words,
                                            int shift, lm_aligned_row* rows,
                                            size_t capacity, size_t* needed,
                                            double* tv_distance);

LM_API lm_status lm_mean_word_length_by_class(const lm_verse* verse, int* lengths,
                                              double* means, size_t capacity,
                                              size_t* needed);

/* ---- induced spectrum and line models ---- */

/* x[0..N-1] = x_1..x_N; q receives Q_1..Q_N. */
LM_API lm_status lm_induced_q(const double* x, int length, double* q, double* x_total);
LM_API lm_status lm_induced_q_via_gf(const double* x, int length, double* q,
                                     double* x_total);

typedef struct lm_flat_q {
  double q_inner;
  double q_peak;
  double peak_excess;
  double mean;
  double x_total;
} lm_flat_q;

typedef struct lm_osc_q {
  double q_odd;
  double q_even;
  double q_peak;
  double even_minus_odd;
  double peak_minus_even;
  double mean;
  double x_total;
} lm_osc_q;

/* x and q may be NULL; otherwise each needs room for N values. */
LM_API lm_status lm_flat_model(double alpha, int length, double* x, double* q,
                               lm_flat_q* out);
LM_API lm_status lm_osc_model(double alpha, double beta, int length, double* x,
                              double* q, lm_osc_q* out);

typedef struct lm_delta_cell {
  double alpha;
  double beta;
  double even_minus_odd;
  double peak_minus_even;
} lm_delta_cell;

typedef struct lm_delta_summary {
  size_t negative_even_minus_odd;
  double min_even_minus_odd;
  double max_even_minus_odd;
  double min_peak_minus_even;
  double max_peak_minus_even;
} lm_delta_summary;

/* steps * steps cells, alpha-major. */
LM_API lm_status lm_delta_grid(int length, double alpha_lo, double alpha_hi,
                               double beta_lo, double beta_hi, int steps,
                               lm_delta_cell* cells, size_t capacity, size_t* needed,
                               lm_delta_summary* summary);

typedef struct lm_property_result {
  char name[32];
  int ok;
  int violating_n;
  double max_error;
} lm_property_result;

LM_API lm_status lm_verify_properties(const double* x, int length, double tolerance,
                                      lm_property_result* results, size_t capacity,
                                      size_t* needed);

typedef struct lm_comparison_info {
  int core_length;
  uint64_t core_lines;
  double rmse;
  int measured_argmax;
  int induced_argmax;
} lm_comparison_info;

/* x needs room for the core length (query with x = NULL first), measured
 * and induced for n_max values each. */
LM_API lm_status lm_measured_vs_induced(const lm_verse* verse, int n_max,
                                        lm_comparison_info* info, double* x,
                                        size_t x_capacity, double* measured,
                                        double* induced, size_t q_capacity);

/* ---- synthetic corpora ---- */

LM_API lm_status lm_gen_geometric_prose(double q, uint64_t words, uint64_t seed,
                                        lm_prose** out);
LM_API lm_status lm_gen_lines_from_x(const double* x, int length, uint64_t lines,
                                     uint64_t seed, lm_verse** out);
LM_API lm_status lm_render_prose(const lm_prose* prose, char* buffer, size_t capacity,
                                 size_t* needed);
LM_API lm_status lm_render_verse(const lm_verse* verse, char* buffer, size_t capacity,
                                 size_t* needed);

#ifdef __cplusplus
}
#endif

#endif  /* LINEAMETRICS_H_ */
