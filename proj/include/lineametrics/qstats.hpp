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

// Word-boundary spectrum of a word-length stream and related diagnostics.
//
// The stream is closed into a ring (last word followed by the first). From
// every word start we walk forward over whole words; each time the running
// syllable total hits n exactly, L_n is incremented. Q_n is the fraction of
// word starts that are followed by a word end exactly n syllables later:
//
//     Q_n = L_n / W
//
// which is flat at q for prose with geometric word lengths
// P(n) = q (1-q)^(n-1), and coincides with the single-line-type model in
// induced.hpp for lineated text.

#pragma once

#include <cstdint>
#include <vector>

#include "lineametrics/corpus.hpp"

namespace lineametrics {

inline constexpr int kDefaultNMax = 30;

struct QDistribution {
  std::vector<std::uint64_t> matches;  // matches[n-1] = L_n
  std::vector<double> values;          // values[n-1] = Q_n
  std::uint64_t words = 0;
  std::uint64_t syllables = 0;

  int n_max() const noexcept { return static_cast<int>(values.size()); }
  double q(int n) const { return values.at(n - 1); }
  /// L_n / I, i.e. matches per syllable rather than per word start.
  double per_syllable(int n) const;
  double mean() const;
};

/// Throws Error{kEmptyCorpus} on an empty document and
/// Error{kInvalidArgument} when n_max < 1.
QDistribution compute_q(const ProseDocument& doc, int n_max = kDefaultNMax);

/// Sum (n-1) c_n / sum n c_n: the share of syllable boundaries that fall
/// inside words. Throws Error{kEmptyCorpus} on an empty histogram.
double internal_boundary_proportion(const WordLengthHistogram& hist);

struct GeometricModel {
  double q = 1.0;  // in (0, 1]

  /// q (1-q)^(n-1)
  double pmf(int n) const;
};

/// q = W / I, the reciprocal of the mean word length.
GeometricModel fit_geometric(const WordLengthHistogram& hist);

/// Empirical P(next word has n syllables | current word has m).
struct TransitionMatrix {
  int max_length = 0;
  std::vector<std::uint64_t> bigrams;  // [(m-1) * max_length + (n-1)]
  std::vector<double> probabilities;   // same layout, row-normalized
  double correlation = 0.0;  // Pearson r of (len_i, len_{i+1})
  bool degenerate = false;   // r undefined (zero variance); reported as 0

  double operator()(int n, int m) const;
  std::uint64_t row_total(int m) const;
};

/// Uses the W-1 adjacent pairs in reading order. Throws
/// Error{kInvalidArgument} for fewer than two words.
TransitionMatrix transition_matrix(const ProseDocument& doc);

struct PeakSignificance {
  double z = 0.0;
  double baseline_mean = 0.0;
  double baseline_sd = 0.0;  // sample standard deviation
  bool degenerate = false;   // baseline_sd == 0; z is 0 or +-inf
};

/// z-score of Q_N against Q_n for n in [1, n_max] that are not multiples of
/// N. Requires N >= 2 and n_max >= 2N.
PeakSignificance peak_significance(const QDistribution& q, int core_length);

}  // namespace lineametrics
