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

#include "report.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lineametrics/lineametrics.h"

namespace lmcli {
namespace fs = std::filesystem;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

void write_atomic(const fs::path& path, const std::string& bytes) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

std::string Table::to_csv() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

namespace {

constexpr double kW = 640, kH = 400;
constexpr double kLeft = 64, kRight = 16, kTop = 36, kBottom = 48;
const char* const kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string esc(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '&': o += "&amp;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void frame(std::ostringstream& o, const std::string& title, const std::string& xl,
           const std::string& yl, double x0, double x1, double y0, double y1) {
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kW << ' ' << kH
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
    << esc(title) << "</text>\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kW - kLeft - kRight
    << "\" height=\"" << kH - kTop - kBottom << "\" fill=\"none\" stroke=\"black\"/>\n";
  o << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 8 << "\" text-anchor=\"middle\">"
    << esc(xl) << "</text>\n";
  o << "<text x=\"14\" y=\"" << kH / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
    << kH / 2 << ")\">" << esc(yl) << "</text>\n";
  o << "<text x=\"" << kLeft << "\" y=\"" << kH - kBottom + 14 << "\" text-anchor=\"middle\">"
    << fmt(x0) << "</text>\n";
  o << "<text x=\"" << kW - kRight << "\" y=\"" << kH - kBottom + 14
    << "\" text-anchor=\"middle\">" << fmt(x1) << "</text>\n";
  o << "<text x=\"" << kLeft - 4 << "\" y=\"" << kH - kBottom << "\" text-anchor=\"end\">"
    << fmt(y0) << "</text>\n";
  o << "<text x=\"" << kLeft - 4 << "\" y=\"" << kTop + 8 << "\" text-anchor=\"end\">"
    << fmt(y1) << "</text>\n";
}

}  // namespace

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<Series>& series) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x0 == x1) x1 = x0 + 1;
  const double pad = (y1 - y0) * 0.05;
  y0 -= pad;
  y1 += pad;
  if (y0 == y1) y0 -= 0.5, y1 += 0.5;

  std::ostringstream o;
  frame(o, title, x_label, y_label, x0, x1, y0, y1);
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* colour = kColours[i % 5];
    o << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[i].points) {
      if (!std::isfinite(y)) continue;
      o << num(kLeft + (x - x0) / (x1 - x0) * pw) << ','
        << num(kTop + (y1 - y) / (y1 - y0) * ph) << ' ';
    }
    o << "\"/>\n";
    o << "<text x=\"" << kW - kRight - 6 << "\" y=\"" << kTop + 14 + 14 * i
      << "\" text-anchor=\"end\" fill=\"" << colour << "\">" << esc(series[i].name)
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string svg_heatmap(const std::string& title, const std::vector<double>& values,
                        int rows, int columns, double x_lo, double x_hi, double y_lo,
                        double y_hi, const std::string& x_label, const std::string& y_label) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) peak = 1.0;

  std::ostringstream o;
  frame(o, title, x_label, y_label, x_lo, x_hi, y_lo, y_hi);
  const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
  const double cw = pw / columns, ch = ph / rows;
  // Row r is the r-th x value, column c the c-th y value.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < columns; ++c) {
      const double v = values[static_cast<std::size_t>(r) * columns + c];
      const int shade = static_cast<int>(255 - 200 * std::abs(v) / peak);
      char colour[16];
      if (v < 0)
        std::snprintf(colour, sizeof colour, "#%02x%02xff", shade, shade);
      else
        std::snprintf(colour, sizeof colour, "#ff%02x%02x", shade, shade);
      o << "<rect x=\"" << num(kLeft + r * cw) << "\" y=\"" << num(kTop + ph - (c + 1) * ch)
        << "\" width=\"" << num(cw + 0.05) << "\" height=\"" << num(ch + 0.05)
        << "\" fill=\"" << colour << "\"/>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

ReportBundle::ReportBundle(fs::path out_dir, Format format, std::string command)
    : out_dir_(std::move(out_dir)), format_(format) {
  fs::create_directories(out_dir_);
  manifest_["tool"] = "lineametrics";
  manifest_["version"] = "0.1.0";
  manifest_["command"] = std::move(command);
  manifest_["parameters"] = nlohmann::json::object();
  manifest_["inputs"] = nlohmann::json::array();
  manifest_["outputs"] = nlohmann::json::array();
}

void ReportBundle::file(const std::string& name, const std::string& bytes) {
  write_atomic(out_dir_ / name, bytes);
  char hex[65];
  lm_sha256_hex(bytes.data(), bytes.size(), hex);
  manifest_["outputs"].push_back({{"file", name}, {"sha256", hex}});
}

void ReportBundle::table(const std::string& name, const Table& t, bool always) {
  if (always || wants_csv()) file(name + ".csv", t.to_csv());
}

void ReportBundle::svg(const std::string& name, const std::string& body) {
  if (wants_svg()) file(name + ".svg", body);
}

void ReportBundle::parameter(const std::string& key, nlohmann::json value) {
  manifest_["parameters"][key] = std::move(value);
}

void ReportBundle::input(const std::string& role, const fs::path& path,
                         const std::string& sha256) {
  manifest_["inputs"].push_back({{"role", role}, {"path", path.string()}, {"sha256", sha256}});
}

void ReportBundle::lexicon(const std::string& path, const std::string& sha256,
                           std::size_t entries) {
  manifest_["lexicon"] = {{"path", path}, {"sha256", sha256}, {"entries", entries}};
}

std::string ReportBundle::digest() const {
  nlohmann::json key;
  key["command"] = manifest_["command"];
  key["parameters"] = manifest_["parameters"];
  key["inputs"] = nlohmann::json::array();
  for (const auto& in : manifest_["inputs"])
    key["inputs"].push_back({in["role"], in["sha256"]});
  if (manifest_.contains("lexicon")) key["lexicon"] = manifest_["lexicon"]["sha256"];
  const std::string canonical = key.dump();  // object keys are sorted
  char hex[65];
  lm_sha256_hex(canonical.data(), canonical.size(), hex);
  return hex;
}

void ReportBundle::write_manifest() {
  manifest_["digest"] = digest();
  write_atomic(out_dir_ / "manifest.json", manifest_.dump(2) + "\n");
}

}  // namespace lmcli
