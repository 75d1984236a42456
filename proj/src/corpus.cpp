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

#include "lineametrics/corpus.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lineametrics/error.hpp"

namespace lineametrics {

namespace {

void check_counts(std::span<const int> counts) {
  for (int c : counts)
    if (c < 1)
      throw Error(ErrorKind::kInvalidArgument, "syllable counts must be >= 1");
}

}  // namespace

ProseDocument::ProseDocument(std::vector<int> counts) : counts_(std::move(counts)) {
  check_counts(counts_);
  syllables_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

int LineRecord::length() const noexcept {
  return std::accumulate(word_counts.begin(), word_counts.end(), 0);
}

VerseDocument::VerseDocument(std::vector<LineRecord> lines) : lines_(std::move(lines)) {
  std::vector<int> all;
  for (const auto& line : lines_) {
    if (line.word_counts.empty())
      throw Error(ErrorKind::kInvalidArgument, "verse line has no words");
    all.insert(all.end(), line.word_counts.begin(), line.word_counts.end());
  }
  stream_ = ProseDocument(std::move(all));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed: " + path.string());
  return std::move(ss).str();
}

ProseDocument prose_from_text(std::string_view text,
                              const SyllableLexicon& lexicon) {
  return ProseDocument(syllabify_text(text, lexicon).counts);
}

VerseDocument verse_from_text(std::string_view text,
                              const SyllableLexicon& lexicon) {
  std::vector<LineRecord> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto counts = syllabify_text(text.substr(pos, nl - pos), lexicon).counts;
    if (!counts.empty()) lines.push_back(LineRecord{std::move(counts)});
    pos = nl + 1;
  }
  return VerseDocument(std::move(lines));
}

ProseDocument load_prose(const std::filesystem::path& path,
                         const SyllableLexicon& lexicon) {
  return prose_from_text(read_file(path), lexicon);
}

VerseDocument load_verse(const std::filesystem::path& path,
                         const SyllableLexicon& lexicon) {
  return verse_from_text(read_file(path), lexicon);
}

WordLengthHistogram::WordLengthHistogram(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    words_ += counts_[i];
    syllables_ += counts_[i] * (i + 1);
  }
}

WordLengthHistogram WordLengthHistogram::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open histogram " + path.string());
  return parse(in, path.string());
}

WordLengthHistogram WordLengthHistogram::parse(std::istream& in,
                                               std::string_view source) {
  std::vector<std::uint64_t> counts;
  std::vector<bool> seen;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const char* why) {
    std::ostringstream msg;
    msg << source << ":" << lineno << ": " << why;
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    int length = 0;
    std::uint64_t count = 0;
    bool ok = tab != std::string::npos;
    if (ok) {
      auto r1 = std::from_chars(line.data(), line.data() + tab, length);
      auto r2 = std::from_chars(line.data() + tab + 1, line.data() + line.size(), count);
      ok = r1.ec == std::errc() && r1.ptr == line.data() + tab &&
           r2.ec == std::errc() && r2.ptr == line.data() + line.size() &&
           length >= 1;
    }
    if (!ok) fail("expected length<TAB>count");
    if (counts.size() < static_cast<std::size_t>(length)) {
      counts.resize(length, 0);
      seen.resize(length, false);
    }
    if (seen[length - 1]) fail("length listed twice");
    seen[length - 1] = true;
    counts[length - 1] = count;
  }
  return WordLengthHistogram(std::move(counts));
}

std::uint64_t WordLengthHistogram::count(int length) const noexcept {
  if (length < 1 || static_cast<std::size_t>(length) > counts_.size()) return 0;
  return counts_[length - 1];
}

double WordLengthHistogram::frequency(int length) const {
  if (empty()) throw Error(ErrorKind::kEmptyCorpus, "empty corpus");
  return static_cast<double>(count(length)) / static_cast<double>(words_);
}

double WordLengthHistogram::mean_length() const {
  if (empty()) throw Error(ErrorKind::kEmptyCorpus, "empty corpus");
  return static_cast<double>(syllables_) / static_cast<double>(words_);
}

WordLengthHistogram word_length_histogram(const ProseDocument& doc) {
  if (doc.empty()) throw Error(ErrorKind::kEmptyCorpus, "empty corpus");
  std::vector<std::uint64_t> counts;
  for (int c : doc.counts()) {
    if (counts.size() < static_cast<std::size_t>(c)) counts.resize(c, 0);
    ++counts[c - 1];
  }
  return WordLengthHistogram(std::move(counts));
}

}  // namespace lineametrics
