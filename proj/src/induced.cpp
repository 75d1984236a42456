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

#include "lineametrics/induced.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lineametrics/error.hpp"

namespace lineametrics {
namespace {

void require_x(const XDistribution& x) {
  if (x.length < 1 || x.values.size() != static_cast<std::size_t>(x.length))
    throw Error(ErrorKind::kInvalidArgument, "malformed x distribution");
  if (!(x.total() > 0.0))
    throw Error(ErrorKind::kInvalidArgument, "x distribution sums to zero");
}

// x at a position taken mod N, residue 0 meaning N.
double x_wrapped(const XDistribution& x, long long pos) {
  const long long n = x.length;
  long long r = ((pos % n) + n) % n;
  return x.values[static_cast<std::size_t>(r == 0 ? n - 1 : r - 1)];
}

void require_unit(double v, const char* what) {
  if (!(v > 0.0 && v <= 1.0))
    throw Error(ErrorKind::kInvalidArgument, std::string(what) + " must lie in (0, 1]");
}

int first_argmax(const std::vector<double>& v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin()) + 1;
}

std::vector<int> local_peaks(const std::vector<double>& v) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i] > v[i - 1] && v[i] > v[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace

double InducedQ::q(int n) const {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "n must be >= 1");
  return values[static_cast<std::size_t>((n - 1) % period)];
}

std::vector<double> InducedQ::extend(int n_max) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(n_max, 0)));
  for (int n = 1; n <= n_max; ++n) out.push_back(q(n));
  return out;
}

double InducedQ::mean() const {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double induced_q_at(const XDistribution& x, int n) {
  require_x(x);
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "n must be >= 1");
  double s = 0.0;
  for (int l = 1; l <= x.length; ++l) s += x.x(l) * x_wrapped(x, l + n);
  return s / x.total();
}

InducedQ induced_q(const XDistribution& x) {
  require_x(x);
  InducedQ out;
  out.period = x.length;
  out.x_total = x.total();
  for (int n = 1; n <= x.length; ++n) out.values.push_back(induced_q_at(x, n));
  return out;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

InducedQ induced_q_via_gf(const XDistribution& x) {
  require_x(x);
  const int n = x.length;
  // a_k = x_k for k = 1..N-1, a_0 = x_N.
  std::vector<double> a(static_cast<std::size_t>(n));
  a[0] = x.x(n);
  for (int k = 1; k < n; ++k) a[static_cast<std::size_t>(k)] = x.x(k);
  std::vector<double> rev(a.rbegin(), a.rend());

  // c[N-1+m] = sum_k a_k a_{k-m}, the z^m coefficient of f(z) f(1/z).
  const auto c = convolve(a, rev);
  std::vector<double> folded(static_cast<std::size_t>(n), 0.0);
  for (std::size_t t = 0; t < c.size(); ++t) {
    const int m = static_cast<int>(t) - (n - 1);
    folded[static_cast<std::size_t>(((m % n) + n) % n)] += c[t];
  }

  InducedQ out;
  out.period = n;
  out.x_total = std::accumulate(a.begin(), a.end(), 0.0);
  for (int k = 1; k <= n; ++k)
    out.values.push_back(folded[static_cast<std::size_t>(k % n)] / out.x_total);
  return out;
}

void FlatModelParams::validate() const {
  require_unit(alpha, "alpha");
  if (length < 2) throw Error(ErrorKind::kInvalidArgument, "N must be >= 2");
}

void OscModelParams::validate() const {
  require_unit(alpha, "alpha");
  require_unit(beta, "beta");
  if (length < 4 || length % 2 != 0)
    throw Error(ErrorKind::kInvalidArgument, "N must be even and >= 4");
}

XDistribution flat_model_x(const FlatModelParams& p) {
  p.validate();
  std::vector<double> v(static_cast<std::size_t>(p.length), p.alpha);
  v.back() = 1.0;
  return XDistribution::from_values(std::move(v));
}

XDistribution osc_model_x(const OscModelParams& p) {
  p.validate();
  std::vector<double> v;
  for (int n = 1; n < p.length; ++n) v.push_back(n % 2 == 1 ? p.alpha : p.beta);
  v.push_back(1.0);
  return XDistribution::from_values(std::move(v));
}

FlatModelQ flat_model_q_closed(const FlatModelParams& p) {
  p.validate();
  const double a = p.alpha;
  const double n = p.length;
  const double x = (n - 1.0) * a + 1.0;

  FlatModelQ out;
  out.q_inner = ((n - 2.0) * a * a + 2.0 * a) / x;
  out.q_peak = ((n - 1.0) * a * a + 1.0) / x;
  out.peak_excess = (1.0 - a) * (1.0 - a) / x;
  out.mean = a + (1.0 - a) / n;
  out.q.period = p.length;
  out.q.x_total = x;
  out.q.values.assign(static_cast<std::size_t>(p.length), out.q_inner);
  out.q.values.back() = out.q_peak;
  return out;
}

OscModelQ osc_model_q_closed(const OscModelParams& p) {
  p.validate();
  const double a = p.alpha, b = p.beta;
  const double n = p.length;
  const double h = n / 2.0;
  const double x = h * a + (h - 1.0) * b + 1.0;

  OscModelQ out;
  out.q_odd = 2.0 * a * ((h - 1.0) * b + 1.0) / x;
  out.q_even = (h * a * a + (h - 2.0) * b * b + 2.0 * b) / x;
  out.q_peak = (h * a * a + (h - 1.0) * b * b + 1.0) / x;
  out.even_minus_odd = ((a - b) / x) * (h * (a - b) - 2.0 * (1.0 - b));
  out.peak_minus_even = (1.0 - b) * (1.0 - b) / x;
  out.mean = (a + b) / 2.0 + (1.0 - b) / n;
  out.q.period = p.length;
  out.q.x_total = x;
  for (int k = 1; k <= p.length; ++k)
    out.q.values.push_back(k == p.length ? out.q_peak
                           : k % 2 == 1  ? out.q_odd
                                         : out.q_even);
  return out;
}

DeltaGrid delta_contour_grid(int length, double alpha_lo, double alpha_hi,
                             double beta_lo, double beta_hi, int steps) {
  if (steps < 2) throw Error(ErrorKind::kInvalidArgument, "steps must be >= 2");
  for (double v : {alpha_lo, alpha_hi, beta_lo, beta_hi}) require_unit(v, "grid bound");
  if (alpha_lo > alpha_hi || beta_lo > beta_hi)
    throw Error(ErrorKind::kInvalidArgument, "grid bounds out of order");

  auto axis = [steps](double lo, double hi, int i) {
    return i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1);
  };

  DeltaGrid g;
  g.length = length;
  g.steps = steps;
  g.cells.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      OscModelParams p{axis(alpha_lo, alpha_hi, i), axis(beta_lo, beta_hi, j), length};
      const auto m = osc_model_q_closed(p);
      g.cells.push_back({p.alpha, p.beta, m.even_minus_odd, m.peak_minus_even});
    }
  }
  auto [lo1, hi1] = std::minmax_element(
      g.cells.begin(), g.cells.end(),
      [](const DeltaCell& l, const DeltaCell& r) { return l.even_minus_odd < r.even_minus_odd; });
  auto [lo2, hi2] = std::minmax_element(
      g.cells.begin(), g.cells.end(),
      [](const DeltaCell& l, const DeltaCell& r) { return l.peak_minus_even < r.peak_minus_even; });
  g.min_even_minus_odd = lo1->even_minus_odd;
  g.max_even_minus_odd = hi1->even_minus_odd;
  g.min_peak_minus_even = lo2->peak_minus_even;
  g.max_peak_minus_even = hi2->peak_minus_even;
  g.negative_even_minus_odd = static_cast<std::size_t>(
      std::count_if(g.cells.begin(), g.cells.end(),
                    [](const DeltaCell& c) { return c.even_minus_odd < 0.0; }));
  return g;
}

bool PropertyReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return c.ok; });
}

PropertyReport verify_properties(const XDistribution& x, double tolerance) {
  const auto q = induced_q(x);
  const int n = x.length;
  PropertyReport r;

  auto record = [&](PropertyCheck& c, int at, double err) {
    if (err > c.max_error) c.max_error = err;
    if (err > tolerance && c.ok) {
      c.ok = false;
      c.violating_n = at;
    }
  };

  PropertyCheck periodic{"periodicity"};
  for (int k = 1; k <= 3 * n; ++k)
    record(periodic, k, std::abs(induced_q_at(x, k + n) - induced_q_at(x, k)));
  r.checks.push_back(periodic);

  PropertyCheck symmetric{"symmetry"};
  for (int k = 1; k < n; ++k) record(symmetric, k, std::abs(q.q(k) - q.q(n - k)));
  r.checks.push_back(symmetric);

  PropertyCheck mean{"mean"};
  record(mean, 0, std::abs(q.mean() - q.x_total / n));
  r.checks.push_back(mean);

  PropertyCheck peak{"peak-maximal"};
  for (int k = 1; k < n; ++k) record(peak, k, std::max(0.0, q.q(k) - q.q(n)));
  r.checks.push_back(peak);

  PropertyCheck variance{"variance-identity"};
  const double xbar = q.x_total / n;
  double ss = 0.0;
  for (double v : x.values) ss += (v - xbar) * (v - xbar);
  record(variance, 0, std::abs((q.q(n) - q.mean()) - ss / q.x_total));
  r.checks.push_back(variance);

  return r;
}

MeasuredVsInduced measured_vs_induced(const VerseDocument& doc, int n_max) {
  if (doc.line_count() == 0) throw Error(ErrorKind::kEmptyCorpus, "empty corpus");
  const auto profile = line_length_profile(doc);

  MeasuredVsInduced out;
  out.core_length = profile.core_length;
  out.x = compute_x(doc, profile.core_length);
  if (out.x.line_count < 2)
    throw Error(ErrorKind::kInvalidArgument, "core line class has fewer than two lines");
  out.induced = induced_q(out.x);
  out.measured = compute_q(doc.stream(), n_max);
  out.induced_extended = out.induced.extend(n_max);

  double ss = 0.0;
  for (int k = 1; k <= n_max; ++k) {
    const double d = out.measured.q(k) - out.induced_extended[static_cast<std::size_t>(k - 1)];
    ss += d * d;
  }
  out.rmse = std::sqrt(ss / n_max);
  out.measured_argmax = first_argmax(out.measured.values);
  out.induced_argmax = first_argmax(out.induced_extended);
  out.measured_peaks = local_peaks(out.measured.values);
  out.induced_peaks = local_peaks(out.induced_extended);
  return out;
}

}  // namespace lineametrics
