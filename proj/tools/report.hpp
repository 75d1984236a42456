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

// Output side of the CLI: CSV tables, minimal SVG plots, and a manifest.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lmcli {

enum class Format { kCsv, kSvg, kBoth };

/// 6 significant digits, '.' decimal point.
std::string fmt(double v);
std::string fmt(std::uint64_t v);
std::string fmt(int v);

/// Writes to a sibling temp file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& bytes);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<Series>& series);

/// Grid cells coloured by sign and magnitude; values row-major with
/// `columns` entries per row.
std::string svg_heatmap(const std::string& title, const std::vector<double>& values,
                        int rows, int columns, double x_lo, double x_hi, double y_lo,
                        double y_hi, const std::string& x_label, const std::string& y_label);

class ReportBundle {
 public:
  ReportBundle(std::filesystem::path out_dir, Format format, std::string command);

  bool wants_csv() const { return format_ != Format::kSvg; }
  bool wants_svg() const { return format_ != Format::kCsv; }

  /// The summary table is always written, whatever the format.
  void table(const std::string& name, const Table& t, bool always = false);
  void svg(const std::string& name, const std::string& body);
  void file(const std::string& name, const std::string& bytes);

  void parameter(const std::string& key, nlohmann::json value);
  void input(const std::string& role, const std::filesystem::path& path,
             const std::string& sha256);
  void lexicon(const std::string& path, const std::string& sha256, std::size_t entries);

  /// Digest over command, parameters, input and lexicon digests.
  std::string digest() const;
  void write_manifest();

 private:
  std::filesystem::path out_dir_;
  Format format_;
  nlohmann::json manifest_;
};

}  // namespace lmcli
