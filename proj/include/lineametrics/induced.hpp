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

// Spectrum induced by a within-line boundary profile.
//
// For a text made of lines of one length N whose boundary patterns are
// drawn independently, a word start sits after position l with probability
// x_l / X and the run of n syllables from it ends on a boundary with
// probability x_{l+n}, so
//
//     Q_n = (1/X) sum_{l=1..N} x_l x_{l+n},    X = sum_l x_l,
//
// with indices taken mod N (residue 0 meaning N). Q is N-periodic,
// symmetric (Q_n = Q_{N-n}), has mean X/N, and peaks at multiples of N:
//
//     Q_N - <Q> = (1/X) sum_n (x_n - <x>)^2.
//
// Two closed-form families are provided. Flat: x_n = alpha for n < N.
// Oscillating (N even): alpha at odd n, beta at even n < N.

#pragma once

#include <string>
#include <vector>

#include "lineametrics/linestats.hpp"
#include "lineametrics/qstats.hpp"

namespace lineametrics {

struct InducedQ {
  int period = 0;              // N
  std::vector<double> values;  // Q_1..Q_N
  double x_total = 0.0;        // X

  /// Periodic lookup; any n >= 1.
  double q(int n) const;
  /// Q_1..Q_{n_max} by periodic extension.
  std::vector<double> extend(int n_max) const;
  double mean() const;
};

/// Direct evaluation of the sum for one n (any n >= 1).
double induced_q_at(const XDistribution& x, int n);

InducedQ induced_q(const XDistribution& x);

/// Same quantity computed as the coefficients of f_x(z) f_x(1/z), with
/// f_x(z) = sum_{k=0}^{N-1} x_k z^k (x_0 = x_N), folded modulo N.
InducedQ induced_q_via_gf(const XDistribution& x);

/// Full linear convolution of two coefficient sequences.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

struct FlatModelParams {
  double alpha = 1.0;  // (0, 1]
  int length = 10;     // N >= 2

  void validate() const;
};

struct OscModelParams {
  double alpha = 1.0;  // odd positions, (0, 1]
  double beta = 1.0;   // even positions, (0, 1]
  int length = 10;     // even, >= 4

  void validate() const;
};

XDistribution flat_model_x(const FlatModelParams& p);
XDistribution osc_model_x(const OscModelParams& p);

struct FlatModelQ {
  InducedQ q;
  double q_inner = 0.0;      // Q_i, i = 1..N-1
  double q_peak = 0.0;       // Q_N
  double peak_excess = 0.0;  // (1-alpha)^2 / X
  double mean = 0.0;         // alpha + (1-alpha)/N
};

FlatModelQ flat_model_q_closed(const FlatModelParams& p);

struct OscModelQ {
  InducedQ q;
  double q_odd = 0.0;
  double q_even = 0.0;  // NaN-free only for N >= 4; even n < N
  double q_peak = 0.0;
  double even_minus_odd = 0.0;   // ((a-b)/X)(N(a-b)/2 - 2(1-b))
  double peak_minus_even = 0.0;  // (1-b)^2 / X
  double mean = 0.0;             // (a+b)/2 + (1-b)/N
};

OscModelQ osc_model_q_closed(const OscModelParams& p);

struct DeltaCell {
  double alpha = 0.0;
  double beta = 0.0;
  double even_minus_odd = 0.0;
  double peak_minus_even = 0.0;
};

struct DeltaGrid {
  int length = 0;
  int steps = 0;
  std::vector<DeltaCell> cells;  // alpha-major
  std::size_t negative_even_minus_odd = 0;
  double min_even_minus_odd = 0.0;
  double max_even_minus_odd = 0.0;
  double min_peak_minus_even = 0.0;
  double max_peak_minus_even = 0.0;
};

/// steps evenly spaced values per axis, endpoints included. Ranges must lie
/// in (0, 1] and steps >= 2.
DeltaGrid delta_contour_grid(int length, double alpha_lo, double alpha_hi,
                             double beta_lo, double beta_hi, int steps);

struct PropertyCheck {
  std::string name;
  bool ok = true;
  int violating_n = 0;  // 0 when ok or not position-specific
  double max_error = 0.0;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;

  bool all_ok() const;
};

inline constexpr double kPropertyTolerance = 1e-12;

/// Periodicity, symmetry, mean = X/N, Q_N maximal, and the variance
/// identity, each to `tolerance`.
PropertyReport verify_properties(const XDistribution& x,
                                 double tolerance = kPropertyTolerance);

struct MeasuredVsInduced {
  int core_length = 0;
  XDistribution x;
  InducedQ induced;
  QDistribution measured;
  std::vector<double> induced_extended;  // Q_1..Q_{n_max}
  double rmse = 0.0;
  int measured_argmax = 0;
  int induced_argmax = 0;
  std::vector<int> measured_peaks;  // local maxima, n in [2, n_max-1]
  std::vector<int> induced_peaks;
};

/// Induces Q from the core-class x and sets it against the measured Q of
/// the whole document. Throws Error{kInvalidArgument} when the core class
/// has fewer than two lines.
MeasuredVsInduced measured_vs_induced(const VerseDocument& doc,
                                      int n_max = kDefaultNMax);

}  // namespace lineametrics
