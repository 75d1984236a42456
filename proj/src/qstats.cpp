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

#include "lineametrics/qstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lineametrics/error.hpp"

namespace lineametrics {

double QDistribution::per_syllable(int n) const {
  return static_cast<double>(matches.at(n - 1)) / static_cast<double>(syllables);
}

double QDistribution::mean() const {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

QDistribution compute_q(const ProseDocument& doc, int n_max) {
  if (doc.empty()) throw Error(ErrorKind::kEmptyCorpus, "empty corpus");
  if (n_max < 1) throw Error(ErrorKind::kInvalidArgument, "n_max must be >= 1");

  const auto counts = doc.counts();
  const std::size_t w = counts.size();
  std::vector<std::uint64_t> hits(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::size_t start = 0; start < w; ++start) {
    std::size_t j = start;
    int total = 0;
    for (;;) {
      total += counts[j];
      if (total > n_max) break;
      ++hits[total];
      if (++j == w) j = 0;
    }
  }

  QDistribution out;
  out.words = doc.words();
  out.syllables = doc.syllables();
  out.matches.assign(hits.begin() + 1, hits.end());
  out.values.reserve(out.matches.size());
  for (auto l : out.matches)
    out.values.push_back(static_cast<double>(l) / static_cast<double>(out.words));
  return out;
}

double internal_boundary_proportion(const WordLengthHistogram& hist) {
  if (hist.empty()) throw Error(ErrorKind::kEmptyCorpus, "empty corpus");
  // sum (n-1) c_n = I - W
  return static_cast<double>(hist.syllables() - hist.words()) /
         static_cast<double>(hist.syllables());
}

double GeometricModel::pmf(int n) const {
  if (n < 1) return 0.0;
  return q * std::pow(1.0 - q, n - 1);
}

GeometricModel fit_geometric(const WordLengthHistogram& hist) {
  if (hist.empty()) throw Error(ErrorKind::kEmptyCorpus, "empty corpus");
  return GeometricModel{static_cast<double>(hist.words()) /
                        static_cast<double>(hist.syllables())};
}

double TransitionMatrix::operator()(int n, int m) const {
  if (n < 1 || m < 1 || n > max_length || m > max_length) return 0.0;
  return probabilities[static_cast<std::size_t>(m - 1) * max_length + (n - 1)];
}

std::uint64_t TransitionMatrix::row_total(int m) const {
  if (m < 1 || m > max_length) return 0;
  auto row = bigrams.begin() + static_cast<std::ptrdiff_t>(m - 1) * max_length;
  return std::accumulate(row, row + max_length, std::uint64_t{0});
}

TransitionMatrix transition_matrix(const ProseDocument& doc) {
  if (doc.words() < 2)
    throw Error(ErrorKind::kInvalidArgument,
                "transition matrix needs at least two words");
  const auto counts = doc.counts();
  TransitionMatrix tm;
  tm.max_length = *std::max_element(counts.begin(), counts.end());
  const auto L = static_cast<std::size_t>(tm.max_length);
  tm.bigrams.assign(L * L, 0);

  // Pearson r over pairs, accumulated around the pair means for stability.
  const std::size_t pairs = counts.size() - 1;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    mx += counts[i];
    my += counts[i + 1];
    ++tm.bigrams[(counts[i] - 1) * L + (counts[i + 1] - 1)];
  }
  mx /= static_cast<double>(pairs);
  my /= static_cast<double>(pairs);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const double dx = counts[i] - mx, dy = counts[i + 1] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx > 0 && syy > 0) {
    tm.correlation = sxy / std::sqrt(sxx * syy);
  } else {
    tm.correlation = 0.0;
    tm.degenerate = true;
  }

  tm.probabilities.assign(L * L, 0.0);
  for (std::size_t m = 0; m < L; ++m) {
    const auto total = tm.row_total(static_cast<int>(m) + 1);
    if (total == 0) continue;
    for (std::size_t n = 0; n < L; ++n)
      tm.probabilities[m * L + n] =
          static_cast<double>(tm.bigrams[m * L + n]) / static_cast<double>(total);
  }
  return tm;
}

PeakSignificance peak_significance(const QDistribution& q, int core_length) {
  if (core_length < 2)
    throw Error(ErrorKind::kInvalidArgument, "core length must be >= 2");
  if (q.n_max() < 2 * core_length)
    throw Error(ErrorKind::kInvalidArgument, "peak significance needs n_max >= 2N");

  std::vector<double> off;
  for (int n = 1; n <= q.n_max(); ++n)
    if (n % core_length != 0) off.push_back(q.q(n));

  PeakSignificance out;
  const double k = static_cast<double>(off.size());
  out.baseline_mean = std::accumulate(off.begin(), off.end(), 0.0) / k;
  double ss = 0.0;
  for (double v : off) ss += (v - out.baseline_mean) * (v - out.baseline_mean);
  out.baseline_sd = std::sqrt(ss / (k - 1.0));

  const double lift = q.q(core_length) - out.baseline_mean;
  // A flat baseline leaves only rounding noise in the sum of squares.
  if (out.baseline_sd <= 1e-12 * std::max(1.0, std::abs(out.baseline_mean))) {
    out.baseline_sd = 0.0;
    out.degenerate = true;
    out.z = std::abs(lift) <= 1e-12 ? 0.0
                        : std::copysign(std::numeric_limits<double>::infinity(), lift);
  } else {
    out.z = lift / out.baseline_sd;
  }
  return out;
}

}  // namespace lineametrics
