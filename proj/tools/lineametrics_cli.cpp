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

// lineametrics command-line driver. Everything numeric goes through the C
// API; this file only gathers inputs and lays out tables.
//
// Exit status: 0 success, 1 internal error, 2 invalid input.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lineametrics/lineametrics.h"
#include "report.hpp"

namespace fs = std::filesystem;
using lmcli::fmt;
using lmcli::ReportBundle;
using lmcli::Table;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct Failure {
  int code;
  std::string message;
};

void check(lm_status s) {
  if (s == LM_OK) return;
  const bool input = s == LM_ERR_INVALID_ARGUMENT || s == LM_ERR_IO ||
                     s == LM_ERR_EMPTY_CORPUS || s == LM_ERR_DOMAIN;
  std::string msg = lm_last_error();
  if (msg.empty()) msg = lm_status_name(s);
  throw Failure{input ? kExitInput : kExitInternal, msg};
}

[[noreturn]] void usage(const std::string& msg) { throw Failure{kExitInput, msg}; }

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Lexicon = std::unique_ptr<lm_lexicon, Deleter<lm_lexicon, lm_lexicon_free>>;
using Prose = std::unique_ptr<lm_prose, Deleter<lm_prose, lm_prose_free>>;
using Verse = std::unique_ptr<lm_verse, Deleter<lm_verse, lm_verse_free>>;
using Hist = std::unique_ptr<lm_histogram, Deleter<lm_histogram, lm_histogram_free>>;

struct Options {
  std::string lexicon;
  int nmax = 30;
  std::uint64_t seed = 1;
  std::string hist;
  std::string out = "lineametrics-out";
  std::string format = "csv";
};

lmcli::Format parse_format(const std::string& f) {
  if (f == "csv") return lmcli::Format::kCsv;
  if (f == "svg") return lmcli::Format::kSvg;
  return lmcli::Format::kBoth;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest_of(const std::string& bytes) {
  char hex[65];
  check(lm_sha256_hex(bytes.data(), bytes.size(), hex));
  return hex;
}

Lexicon open_lexicon(const Options& o, ReportBundle& bundle) {
  std::string path = o.lexicon;
  if (path.empty())
    if (const char* env = std::getenv("LINEAMETRICS_LEXICON")) path = env;
  lm_lexicon* raw = nullptr;
  if (path.empty()) {
    std::cerr << "lineametrics: no lexicon given; every word uses the heuristic\n";
    check(lm_lexicon_new(&raw));
  } else {
    check(lm_lexicon_load(path.c_str(), &raw));
  }
  Lexicon lex(raw);
  char hex[65];
  std::size_t size = 0;
  check(lm_lexicon_digest(lex.get(), hex));
  check(lm_lexicon_size(lex.get(), &size));
  bundle.lexicon(path, hex, size);
  return lex;
}

// Two-call helper for the caller-buffer convention.
template <typename T, typename Fn>
std::vector<T> fetch(Fn&& call) {
  std::size_t need = 0;
  lm_status s = call(nullptr, 0, &need);
  if (s != LM_ERR_BUFFER_TOO_SMALL) check(s);
  std::vector<T> buf(need);
  check(call(buf.data(), buf.size(), &need));
  return buf;
}

std::vector<double> q_values(const lm_prose* p, int nmax, std::vector<std::uint64_t>* l = nullptr) {
  std::vector<double> q(static_cast<std::size_t>(nmax));
  std::vector<std::uint64_t> matches(q.size());
  check(lm_compute_q(p, nmax, matches.data(), q.data(), q.size()));
  if (l) *l = std::move(matches);
  return q;
}

// ---- analyze-prose ----

void word_length_tables(const lm_histogram* h, ReportBundle& b, Table& summary) {
  std::size_t max_len = 0;
  std::uint64_t words = 0, syllables = 0;
  double q = 0, mean = 0, p_int = 0;
  check(lm_histogram_max_length(h, &max_len));
  check(lm_histogram_words(h, &words));
  check(lm_histogram_syllables(h, &syllables));
  check(lm_fit_geometric(h, &q));
  check(lm_histogram_mean_length(h, &mean));
  check(lm_internal_boundary_proportion(h, &p_int));

  Table pn{{"n", "count", "P_n", "geometric"}, {}};
  lmcli::Series measured{"P_n", {}}, model{"geometric", {}};
  for (int n = 1; n <= static_cast<int>(max_len); ++n) {
    std::uint64_t c = 0;
    double f = 0;
    check(lm_histogram_count(h, n, &c));
    check(lm_histogram_frequency(h, n, &f));
    const double g = q * std::pow(1.0 - q, n - 1);
    pn.rows.push_back({fmt(n), fmt(c), fmt(f), fmt(g)});
    measured.points.emplace_back(n, f);
    model.points.emplace_back(n, g);
  }
  b.table("word_lengths", pn);
  b.svg("word_lengths",
        lmcli::svg_line_plot("Word length distribution", "syllables", "P_n", {measured, model}));

  summary.rows.push_back({"words", fmt(words)});
  summary.rows.push_back({"syllables", fmt(syllables)});
  summary.rows.push_back({"q_hat", fmt(q)});
  summary.rows.push_back({"mean_word_length", fmt(mean)});
  summary.rows.push_back({"internal_boundary_proportion", fmt(p_int)});
}

void analyze_prose(const Options& o, const std::string& file, ReportBundle& b) {
  Table summary{{"key", "value"}, {}};
  b.parameter("nmax", o.nmax);
  if (!o.hist.empty()) {
    if (!file.empty()) usage("give either a prose file or --hist, not both");
    b.input("histogram", o.hist, digest_of(slurp(o.hist)));
    lm_histogram* raw = nullptr;
    check(lm_histogram_load(o.hist.c_str(), &raw));
    Hist h(raw);
    word_length_tables(h.get(), b, summary);
    b.table("summary", summary, true);
    return;
  }
  if (file.empty()) usage("analyze-prose needs a FILE or --hist");

  const std::string text = slurp(file);
  b.input("prose", file, digest_of(text));
  Lexicon lex = open_lexicon(o, b);
  lm_prose* raw = nullptr;
  check(lm_prose_from_text(lex.get(), text.data(), text.size(), &raw));
  Prose prose(raw);
  std::uint64_t words = 0;
  check(lm_prose_words(prose.get(), &words));
  if (words == 0) throw Failure{kExitInput, "empty corpus"};

  lm_histogram* hraw = nullptr;
  check(lm_histogram_from_prose(prose.get(), &hraw));
  Hist h(hraw);
  word_length_tables(h.get(), b, summary);

  std::vector<std::uint64_t> matches;
  const auto q = q_values(prose.get(), o.nmax, &matches);
  double q_hat = 0;
  check(lm_fit_geometric(h.get(), &q_hat));
  Table qt{{"n", "L_n", "Q_n"}, {}};
  lmcli::Series qs{"Q_n", {}}, flat{"q_hat", {}};
  double max_dev = 0.0, q_sum = 0.0;
  for (int n = 1; n <= o.nmax; ++n) {
    const double v = q[static_cast<std::size_t>(n - 1)];
    qt.rows.push_back({fmt(n), fmt(matches[static_cast<std::size_t>(n - 1)]), fmt(v)});
    qs.points.emplace_back(n, v);
    flat.points.emplace_back(n, q_hat);
    max_dev = std::max(max_dev, std::abs(v - q_hat));
    q_sum += v;
  }
  b.table("q", qt);
  b.svg("q", lmcli::svg_line_plot("Q_n", "n (syllables)", "Q_n", {qs, flat}));
  summary.rows.push_back({"mean_Q", fmt(q_sum / o.nmax)});
  summary.rows.push_back({"max_abs_Q_minus_q_hat", fmt(max_dev)});

  if (words >= 2) {
    lm_transition_info info{};
    std::size_t need = 0;
    lm_status s = lm_transition_matrix(prose.get(), &info, nullptr, nullptr, 0, &need);
    if (s != LM_ERR_BUFFER_TOO_SMALL) check(s);
    std::vector<std::uint64_t> bigrams(need);
    std::vector<double> probs(need);
    check(lm_transition_matrix(prose.get(), &info, bigrams.data(), probs.data(), need, &need));
    Table tm{{"current", "next", "count", "probability"}, {}};
    const auto L = static_cast<std::size_t>(info.max_length);
    for (std::size_t m = 0; m < L; ++m)
      for (std::size_t n = 0; n < L; ++n)
        tm.rows.push_back({fmt(static_cast<int>(m + 1)), fmt(static_cast<int>(n + 1)),
                           fmt(bigrams[m * L + n]), fmt(probs[m * L + n])});
    b.table("transitions", tm);
    summary.rows.push_back({"adjacent_length_correlation", fmt(info.correlation)});
    summary.rows.push_back({"correlation_degenerate", fmt(info.degenerate)});
  }

  // Heuristic-only words, for lexicon maintenance.
  const fs::path unknown = fs::path(o.out) / "unknown_words.tsv";
  fs::path tmp = unknown;
  tmp += ".tmp";
  std::size_t types = 0;
  check(lm_write_unknown_report(lex.get(), text.data(), text.size(), tmp.c_str(), &types));
  fs::rename(tmp, unknown);
  summary.rows.push_back({"unknown_word_types", fmt(static_cast<std::uint64_t>(types))});

  b.table("summary", summary, true);
}

// ---- analyze-verse ----

void analyze_verse(const Options& o, const std::string& file, ReportBundle& b) {
  b.parameter("nmax", o.nmax);
  const std::string text = slurp(file);
  b.input("verse", file, digest_of(text));
  Lexicon lex = open_lexicon(o, b);
  lm_verse* raw = nullptr;
  check(lm_verse_from_text(lex.get(), text.data(), text.size(), &raw));
  Verse verse(raw);
  std::size_t lines = 0;
  check(lm_verse_line_count(verse.get(), &lines));
  if (lines == 0) throw Failure{kExitInput, "empty corpus"};

  lm_profile_info info{};
  std::vector<int> lengths;
  std::vector<std::uint64_t> counts;
  {
    std::size_t need = 0;
    lm_status s = lm_line_profile(verse.get(), &info, nullptr, nullptr, 0, &need);
    if (s != LM_ERR_BUFFER_TOO_SMALL) check(s);
    lengths.resize(need);
    counts.resize(need);
    check(lm_line_profile(verse.get(), &info, lengths.data(), counts.data(), need, &need));
  }
  Table profile{{"line_length", "lines", "share"}, {}};
  lmcli::Series ps{"lines", {}};
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double share = static_cast<double>(counts[i]) / static_cast<double>(info.total_lines);
    profile.rows.push_back({fmt(lengths[i]), fmt(counts[i]), fmt(share)});
    ps.points.emplace_back(lengths[i], share);
  }
  b.table("line_profile", profile);
  b.svg("line_profile", lmcli::svg_line_plot("Line lengths", "syllables", "share", {ps}));

  // Per-class x tables and word length.
  std::vector<int> cls;
  std::vector<double> means;
  {
    std::size_t need = 0;
    lm_status s = lm_mean_word_length_by_class(verse.get(), nullptr, nullptr, 0, &need);
    if (s != LM_ERR_BUFFER_TOO_SMALL) check(s);
    cls.resize(need);
    means.resize(need);
    check(lm_mean_word_length_by_class(verse.get(), cls.data(), means.data(), need, &need));
  }
  Table classes{{"line_length", "lines", "mean_word_length", "alternation_index"}, {}};
  double core_alt = NAN;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const int n = cls[i];
    std::vector<double> x(static_cast<std::size_t>(n));
    std::uint64_t class_lines = 0;
    check(lm_compute_x(verse.get(), n, x.data(), x.size(), &class_lines));
    Table xt{{"n", "x_n"}, {}};
    lmcli::Series xs{"x_n", {}};
    for (int k = 1; k <= n; ++k) {
      xt.rows.push_back({fmt(k), fmt(x[static_cast<std::size_t>(k - 1)])});
      xs.points.emplace_back(k, x[static_cast<std::size_t>(k - 1)]);
    }
    b.table("x_" + std::to_string(n), xt);
    b.svg("x_" + std::to_string(n),
          lmcli::svg_line_plot("x_n, " + std::to_string(n) + "-syllable lines", "position",
                               "x_n", {xs}));
    std::string alt;
    if (n >= 4) {
      double a = 0;
      check(lm_alternation_index(x.data(), n, &a));
      alt = fmt(a);
      if (n == info.core_length) core_alt = a;
    }
    classes.rows.push_back({fmt(n), fmt(class_lines), fmt(means[i]), alt});
  }
  b.table("line_classes", classes);

  lm_comparison_info cmp{};
  std::vector<double> measured(static_cast<std::size_t>(o.nmax));
  std::vector<double> induced(measured.size());
  check(lm_measured_vs_induced(verse.get(), o.nmax, &cmp, nullptr, 0, measured.data(),
                               induced.data(), measured.size()));
  Table qt{{"n", "Q_n", "induced_Q_n"}, {}};
  lmcli::Series ms{"measured", {}}, is{"induced", {}};
  for (int n = 1; n <= o.nmax; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    qt.rows.push_back({fmt(n), fmt(measured[i]), fmt(induced[i])});
    ms.points.emplace_back(n, measured[i]);
    is.points.emplace_back(n, induced[i]);
  }
  b.table("q", qt);
  b.svg("q", lmcli::svg_line_plot("Measured and induced Q_n", "n (syllables)", "Q_n", {ms, is}));

  std::uint64_t words = 0, syllables = 0;
  {
    lm_prose* sraw = nullptr;
    check(lm_verse_stream(verse.get(), &sraw));
    Prose stream(sraw);
    check(lm_prose_words(stream.get(), &words));
    check(lm_prose_syllables(stream.get(), &syllables));
  }

  Table summary{{"key", "value"}, {}};
  summary.rows.push_back({"lines", fmt(info.total_lines)});
  summary.rows.push_back({"words", fmt(words)});
  summary.rows.push_back({"syllables", fmt(syllables)});
  summary.rows.push_back({"core_length", fmt(info.core_length)});
  summary.rows.push_back({"core_lines", fmt(cmp.core_lines)});
  summary.rows.push_back({"variant_lines", fmt(info.variant_count)});
  summary.rows.push_back({"alternation_index", std::isnan(core_alt) ? "" : fmt(core_alt)});
  if (o.nmax >= 2 * info.core_length && info.core_length >= 2) {
    lm_peak peak{};
    check(lm_peak_significance(measured.data(), measured.size(), info.core_length, &peak));
    summary.rows.push_back({"peak_z", fmt(peak.z)});
    summary.rows.push_back({"baseline_mean", fmt(peak.baseline_mean)});
    summary.rows.push_back({"baseline_sd", fmt(peak.baseline_sd)});
    summary.rows.push_back({"peak_degenerate", fmt(peak.degenerate)});
  } else {
    std::cerr << "lineametrics: --nmax below twice the core length; no peak z-score\n";
  }
  summary.rows.push_back({"rmse_measured_vs_induced", fmt(cmp.rmse)});
  summary.rows.push_back({"measured_argmax", fmt(cmp.measured_argmax)});
  summary.rows.push_back({"induced_argmax", fmt(cmp.induced_argmax)});
  b.table("summary", summary, true);
}

// ---- model ----

struct ModelArgs {
  std::string kind;
  double alpha = 0.75;
  double beta = 0.6;
  int length = 10;
  int steps = 100;
  double alpha_lo = 0.01, alpha_hi = 1.0, beta_lo = 0.01, beta_hi = 1.0;
};

void series_tables(const std::vector<double>& x, const std::vector<double>& q,
                   ReportBundle& b) {
  Table xt{{"n", "x_n"}, {}}, qt{{"n", "Q_n"}, {}};
  lmcli::Series xs{"x_n", {}}, qs{"Q_n", {}};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    xt.rows.push_back({fmt(n), fmt(x[i])});
    qt.rows.push_back({fmt(n), fmt(q[i])});
    xs.points.emplace_back(n, x[i]);
    qs.points.emplace_back(n, q[i]);
  }
  b.table("x", xt);
  b.table("q", qt);
  b.svg("x", lmcli::svg_line_plot("Model x_n", "position", "x_n", {xs}));
  b.svg("q", lmcli::svg_line_plot("Closed-form Q_n", "n", "Q_n", {qs}));
}

void model(const ModelArgs& m, ReportBundle& b) {
  b.parameter("kind", m.kind);
  b.parameter("length", m.length);
  Table summary{{"key", "value"}, {}};
  if (m.length < 2) usage("--length must be >= 2");
  const auto n = static_cast<std::size_t>(m.length);

  if (m.kind == "flat") {
    b.parameter("alpha", m.alpha);
    std::vector<double> x(n), q(n);
    lm_flat_q r{};
    check(lm_flat_model(m.alpha, m.length, x.data(), q.data(), &r));
    series_tables(x, q, b);
    summary.rows = {{"X", fmt(r.x_total)},
                    {"Q_inner", fmt(r.q_inner)},
                    {"Q_N", fmt(r.q_peak)},
                    {"delta_peak", fmt(r.peak_excess)},
                    {"mean_Q", fmt(r.mean)}};
  } else if (m.kind == "osc") {
    b.parameter("alpha", m.alpha);
    b.parameter("beta", m.beta);
    std::vector<double> x(n), q(n);
    lm_osc_q r{};
    check(lm_osc_model(m.alpha, m.beta, m.length, x.data(), q.data(), &r));
    series_tables(x, q, b);
    summary.rows = {{"X", fmt(r.x_total)},
                    {"Q_odd", fmt(r.q_odd)},
                    {"Q_even", fmt(r.q_even)},
                    {"Q_N", fmt(r.q_peak)},
                    {"delta_even_odd", fmt(r.even_minus_odd)},
                    {"delta_peak_even", fmt(r.peak_minus_even)},
                    {"mean_Q", fmt(r.mean)}};
  } else {
    b.parameter("steps", m.steps);
    b.parameter("alpha_range", {m.alpha_lo, m.alpha_hi});
    b.parameter("beta_range", {m.beta_lo, m.beta_hi});
    lm_delta_summary s{};
    auto cells = fetch<lm_delta_cell>([&](lm_delta_cell* buf, std::size_t cap, std::size_t* need) {
      return lm_delta_grid(m.length, m.alpha_lo, m.alpha_hi, m.beta_lo, m.beta_hi, m.steps,
                           buf, cap, need, &s);
    });
    Table eo{{"alpha", "beta", "delta"}, {}}, pe{{"alpha", "beta", "delta"}, {}};
    std::vector<double> v_eo, v_pe;
    for (const auto& c : cells) {
      eo.rows.push_back({fmt(c.alpha), fmt(c.beta), fmt(c.even_minus_odd)});
      pe.rows.push_back({fmt(c.alpha), fmt(c.beta), fmt(c.peak_minus_even)});
      v_eo.push_back(c.even_minus_odd);
      v_pe.push_back(c.peak_minus_even);
    }
    b.table("grid_even_minus_odd", eo);
    b.table("grid_peak_minus_even", pe);
    b.svg("grid_even_minus_odd",
          lmcli::svg_heatmap("Q_even - Q_odd (blue < 0)", v_eo, m.steps, m.steps, m.alpha_lo,
                             m.alpha_hi, m.beta_lo, m.beta_hi, "alpha", "beta"));
    b.svg("grid_peak_minus_even",
          lmcli::svg_heatmap("Q_N - Q_even", v_pe, m.steps, m.steps, m.alpha_lo, m.alpha_hi,
                             m.beta_lo, m.beta_hi, "alpha", "beta"));
    summary.rows = {{"cells", fmt(static_cast<std::uint64_t>(cells.size()))},
                    {"negative_even_minus_odd",
                     fmt(static_cast<std::uint64_t>(s.negative_even_minus_odd))},
                    {"min_even_minus_odd", fmt(s.min_even_minus_odd)},
                    {"max_even_minus_odd", fmt(s.max_even_minus_odd)},
                    {"min_peak_minus_even", fmt(s.min_peak_minus_even)},
                    {"max_peak_minus_even", fmt(s.max_peak_minus_even)}};
  }
  b.table("summary", summary, true);
}

// ---- simulate ----

struct SimArgs {
  std::string kind;
  double q = 0.7;
  std::uint64_t words = 100000;
  std::string x_file;
  std::uint64_t lines = 1000;
};

// Accepts one value per line, or the `n,x_n` table written by `model`.
std::vector<double> read_x(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<double> x;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
    const auto comma = line.find_first_of(",\t");
    const std::string cell = comma == std::string::npos ? line : line.substr(comma + 1);
    try {
      std::size_t used = 0;
      x.push_back(std::stod(cell, &used));
      if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      usage("bad x value in " + path + ": " + line);
    }
  }
  if (x.empty()) usage("no x values in " + path);
  return x;
}

void simulate(const Options& o, const SimArgs& s, ReportBundle& b) {
  b.parameter("kind", s.kind);
  b.parameter("seed", o.seed);
  std::size_t need = 0;
  std::string text;
  if (s.kind == "prose") {
    b.parameter("q", s.q);
    b.parameter("words", s.words);
    lm_prose* raw = nullptr;
    check(lm_gen_geometric_prose(s.q, s.words, o.seed, &raw));
    Prose p(raw);
    lm_status st = lm_render_prose(p.get(), nullptr, 0, &need);
    if (st != LM_ERR_BUFFER_TOO_SMALL) check(st);
    text.resize(need);
    check(lm_render_prose(p.get(), text.data(), need, &need));
  } else {
    if (s.x_file.empty()) usage("simulate verse needs --x FILE");
    const auto x = read_x(s.x_file);
    b.input("x", s.x_file, digest_of(slurp(s.x_file)));
    b.parameter("lines", s.lines);
    lm_verse* raw = nullptr;
    check(lm_gen_lines_from_x(x.data(), static_cast<int>(x.size()), s.lines, o.seed, &raw));
    Verse v(raw);
    lm_status st = lm_render_verse(v.get(), nullptr, 0, &need);
    if (st != LM_ERR_BUFFER_TOO_SMALL) check(st);
    text.resize(need);
    check(lm_render_verse(v.get(), text.data(), need, &need));
  }
  text.pop_back();  // terminating NUL
  b.file("document.txt", text);
}

// ---- violations ----

struct ViolationArgs {
  std::vector<int> lengths{8, 10};
  std::optional<double> p_internal;
  std::optional<std::uint64_t> total_syllables;
};

void violations(const Options& o, const std::string& file, const ViolationArgs& v,
                ReportBundle& b) {
  b.parameter("lengths", v.lengths);
  if (v.p_internal) b.parameter("p_internal", *v.p_internal);
  if (v.total_syllables) b.parameter("total_syllables", *v.total_syllables);
  if (v.lengths.empty()) usage("--lengths needs at least one N");

  Prose prose;
  Hist hist;
  if (!o.hist.empty()) {
    if (!file.empty()) usage("give either a prose file or --hist, not both");
    b.input("histogram", o.hist, digest_of(slurp(o.hist)));
    lm_histogram* raw = nullptr;
    check(lm_histogram_load(o.hist.c_str(), &raw));
    hist.reset(raw);
  } else {
    if (file.empty()) usage("violations needs a FILE or --hist");
    const std::string text = slurp(file);
    b.input("prose", file, digest_of(text));
    Lexicon lex = open_lexicon(o, b);
    lm_prose* raw = nullptr;
    check(lm_prose_from_text(lex.get(), text.data(), text.size(), &raw));
    prose.reset(raw);
    lm_histogram* hraw = nullptr;
    check(lm_histogram_from_prose(prose.get(), &hraw));
    hist.reset(hraw);
  }

  std::uint64_t syllables = 0;
  double p = 0;
  check(lm_histogram_syllables(hist.get(), &syllables));
  check(lm_internal_boundary_proportion(hist.get(), &p));
  if (v.total_syllables) syllables = *v.total_syllables;
  if (v.p_internal) p = *v.p_internal;

  Table t{{"N", "cuts", "exact", "internal_proportion", "expected", "expected_rounded"}, {}};
  std::vector<double> expected;
  std::vector<std::optional<std::uint64_t>> exact;
  for (int n : v.lengths) {
    double e = 0;
    check(lm_expected_violations(syllables, p, n, &e));
    std::optional<std::uint64_t> ex;
    if (prose) {
      lm_violations r{};
      check(lm_theoretical_violations(prose.get(), n, &r));
      ex = r.exact;
    }
    expected.push_back(e);
    exact.push_back(ex);
    t.rows.push_back({fmt(n), fmt(syllables / static_cast<std::uint64_t>(n)),
                      ex ? fmt(*ex) : "", fmt(p), fmt(e), fmt(std::round(e))});
  }
  b.table("violations", t, true);

  Table r{{"N_a", "N_b", "expected_ratio", "exact_ratio"}, {}};
  for (std::size_t i = 0; i < v.lengths.size(); ++i)
    for (std::size_t j = i + 1; j < v.lengths.size(); ++j) {
      std::string exact_ratio;
      if (exact[i] && exact[j])
        exact_ratio = fmt(static_cast<double>(*exact[i]) / static_cast<double>(*exact[j]));
      r.rows.push_back({fmt(v.lengths[i]), fmt(v.lengths[j]),
                        fmt(expected[i] / expected[j]), exact_ratio});
    }
  b.table("violation_ratios", r, true);

  // Vary-up lineation against the word-length distribution.
  if (prose) {
    Table vt{{"N", "lines", "tv_shift_minus_1", "tv_shift_0", "tv_shift_plus_1"}, {}};
    for (int n : v.lengths) {
      lm_vary_up_info info{};
      std::vector<int> lens;
      std::vector<std::uint64_t> counts;
      std::size_t need = 0;
      lm_status s = lm_vary_up(prose.get(), n, &info, nullptr, nullptr, 0, &need);
      if (s != LM_ERR_BUFFER_TOO_SMALL) check(s);
      lens.resize(need);
      counts.resize(need);
      check(lm_vary_up(prose.get(), n, &info, lens.data(), counts.data(), need, &need));
      std::vector<std::string> row{fmt(n), fmt(info.lines)};
      for (int shift : {-1, 0, 1}) {
        double tv = 0;
        auto rows = fetch<lm_aligned_row>([&](lm_aligned_row* buf, std::size_t cap,
                                              std::size_t* nd) {
          return lm_profile_vs_word_lengths(lens.data(), counts.data(), lens.size(), n,
                                            hist.get(), shift, buf, cap, nd, &tv);
        });
        row.push_back(fmt(tv));
        if (shift != 0) continue;
        Table at{{"line_length", "word_length", "line_share", "word_share"}, {}};
        lmcli::Series ls{"vary-up lines", {}}, ws{"words", {}};
        for (const auto& a : rows) {
          at.rows.push_back({fmt(a.line_length), fmt(a.word_length), fmt(a.line_share),
                             fmt(a.word_share)});
          ls.points.emplace_back(a.word_length, a.line_share);
          ws.points.emplace_back(a.word_length, a.word_share);
        }
        b.table("vary_up_" + std::to_string(n), at);
        b.svg("vary_up_" + std::to_string(n),
              lmcli::svg_line_plot("Vary-up lines vs word lengths, N=" + std::to_string(n),
                                   "word length (line length - N + 1)", "share", {ls, ws}));
      }
      vt.rows.push_back(row);
    }
    b.table("vary_up_summary", vt, true);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lineametrics: word-boundary spectra of prose and verse"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--lexicon", o.lexicon, "word<TAB>syllables lexicon (default $LINEAMETRICS_LEXICON)");
  app.add_option("--nmax", o.nmax, "largest n for Q_n")->check(CLI::Range(1, 100000));
  app.add_option("--seed", o.seed, "generator seed");
  app.add_option("--hist", o.hist, "word-length histogram (length<TAB>count) instead of text");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--format", o.format, "csv, svg or both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));

  std::string file;
  auto* prose_cmd = app.add_subcommand("analyze-prose", "Q_n, word lengths, transitions");
  prose_cmd->add_option("file", file, "prose text");

  auto* verse_cmd = app.add_subcommand("analyze-verse", "line profile, x_n, measured and induced Q_n");
  verse_cmd->add_option("file", file, "verse text, one line per line")->required();

  ModelArgs m;
  auto* model_cmd = app.add_subcommand("model", "closed-form line models");
  model_cmd->add_option("kind", m.kind, "flat, osc or contour")
      ->required()
      ->check(CLI::IsMember({"flat", "osc", "contour"}));
  model_cmd->add_option("--alpha", m.alpha, "x at odd (osc) or all interior (flat) positions");
  model_cmd->add_option("--beta", m.beta, "x at even positions (osc)");
  model_cmd->add_option("--length", m.length, "line length N");
  model_cmd->add_option("--steps", m.steps, "grid points per axis (contour)");
  model_cmd->add_option("--alpha-lo", m.alpha_lo);
  model_cmd->add_option("--alpha-hi", m.alpha_hi);
  model_cmd->add_option("--beta-lo", m.beta_lo);
  model_cmd->add_option("--beta-hi", m.beta_hi);

  SimArgs s;
  auto* sim_cmd = app.add_subcommand("simulate", "synthetic placeholder corpora");
  sim_cmd->add_option("kind", s.kind, "prose or verse")
      ->required()
      ->check(CLI::IsMember({"prose", "verse"}));
  sim_cmd->add_option("--q", s.q, "word-end probability (prose)");
  sim_cmd->add_option("--words", s.words, "word count (prose)");
  sim_cmd->add_option("--x", s.x_file, "x_n file (verse)");
  sim_cmd->add_option("--lines", s.lines, "line count (verse)");

  ViolationArgs v;
  auto* viol_cmd = app.add_subcommand("violations", "line cuts that fall inside words");
  viol_cmd->add_option("file", file, "prose text");
  viol_cmd->add_option("--lengths", v.lengths, "line lengths N")->delimiter(',');
  viol_cmd->add_option("--p-internal", v.p_internal, "override the internal boundary share");
  viol_cmd->add_option("--total-syllables", v.total_syllables, "override I");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    ReportBundle bundle(o.out, parse_format(o.format), cmd->get_name());
    bundle.parameter("format", o.format);
    if (cmd == prose_cmd) {
      analyze_prose(o, file, bundle);
    } else if (cmd == verse_cmd) {
      analyze_verse(o, file, bundle);
    } else if (cmd == model_cmd) {
      model(m, bundle);
    } else if (cmd == sim_cmd) {
      simulate(o, s, bundle);
    } else {
      violations(o, file, v, bundle);
    }
    bundle.write_manifest();
  } catch (const Failure& f) {
    std::cerr << "lineametrics: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "lineametrics: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
