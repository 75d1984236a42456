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

#include "lineametrics/syllabifier.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "lineametrics/digest.hpp"
#include "lineametrics/error.hpp"

namespace lineametrics {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at text[pos] and advances pos. Malformed
// sequences yield U+FFFD and consume a single byte.
char32_t next_code_point(std::string_view text, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  int extra = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    ++pos;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + extra >= text.size()) {
    ++pos;
    return kReplacement;
  }
  for (int i = 1; i <= extra; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Latin (incl. Latin-1 and Extended-A/B), Greek and Cyrillic letters.
bool is_letter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x386 && cp <= 0x3FF) return cp != 0x387;
  return cp >= 0x400 && cp <= 0x4FF;
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  // Latin Extended-A pairs upper/lower on even/odd code points, with the
  // 0x139..0x148 and 0x179..0x17E runs offset by one.
  if (cp >= 0x100 && cp <= 0x137 && cp != 0x130) return cp | 1;
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E))
    return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return cp | 1;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 32;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  return cp;
}

// ASCII stand-in used by the heuristic: vowels fold to their base letter,
// other letters become a consonant placeholder unless already ASCII.
char base_letter(char32_t cp) {
  cp = to_lower(cp);
  if (cp < 0x80) return static_cast<char>(cp);
  if (cp >= 0xE0 && cp <= 0xE6) return 'a';
  if (cp >= 0xE8 && cp <= 0xEB) return 'e';
  if (cp >= 0xEC && cp <= 0xEF) return 'i';
  if ((cp >= 0xF2 && cp <= 0xF6) || cp == 0xF8 || cp == 0x153) return 'o';
  if (cp >= 0xF9 && cp <= 0xFC) return 'u';
  if (cp == 0xFD || cp == 0xFF) return 'y';
  if (cp >= 0x101 && cp <= 0x105) return 'a';
  if (cp >= 0x113 && cp <= 0x11B) return 'e';
  if (cp >= 0x129 && cp <= 0x12F) return 'i';
  if (cp >= 0x14D && cp <= 0x151) return 'o';
  if (cp >= 0x169 && cp <= 0x173) return 'u';
  return 'x';
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c); }

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string fold_case(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t pos = 0;
  while (pos < word.size()) append_utf8(out, to_lower(next_code_point(word, pos)));
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  bool pending_apostrophe = false;
  std::string apostrophe_bytes;

  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
    pending_apostrophe = false;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = next_code_point(text, pos);
    if (is_letter(cp)) {
      if (pending_apostrophe) {
        current += apostrophe_bytes;
        pending_apostrophe = false;
      }
      current.append(text.substr(start, pos - start));
    } else if (is_apostrophe(cp) && !current.empty() && !pending_apostrophe) {
      pending_apostrophe = true;
      apostrophe_bytes.assign(text.substr(start, pos - start));
    } else {
      flush();
    }
  }
  flush();
  return words;
}

int heuristic_syllables(std::string_view word) {
  std::string base;
  std::size_t pos = 0;
  char32_t last = 0;
  while (pos < word.size()) {
    last = next_code_point(word, pos);
    base.push_back(is_apostrophe(last) ? '\'' : base_letter(last));
  }

  int groups = 0;
  bool in_group = false;
  for (char c : base) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }

  const std::size_t n = base.size();
  if (groups >= 2 && n >= 2 && (last == U'e' || last == U'E') && is_consonant(base[n - 2])) {
    const bool consonant_le =
        base[n - 2] == 'l' && n >= 3 && is_consonant(base[n - 3]);
    if (!consonant_le) --groups;
  }

  for (std::size_t i = 1; i + 3 < n; ++i) {
    if (base.compare(i, 3, "ien") != 0) continue;
    const char before = base[i - 1];
    const char after = base[i + 3];
    if ((after == 'c' || after == 't') &&
        std::string_view("bdlnrv").find(before) != std::string_view::npos)
      ++groups;
  }

  return std::max(groups, 1);
}

Token count_syllables(std::string_view word, const SyllableLexicon& lexicon) {
  Token token;
  token.surface = std::string(word);
  if (auto hit = lexicon.lookup(word)) {
    token.syllables = *hit;
    token.provenance = Provenance::kLexicon;
  } else {
    token.syllables = heuristic_syllables(word);
    token.provenance = Provenance::kHeuristic;
  }
  return token;
}

SyllabifiedText syllabify_text(std::string_view text,
                               const SyllableLexicon& lexicon) {
  SyllabifiedText out;
  std::map<std::string, std::uint64_t> unknown;
  for (const auto& word : tokenize(text)) {
    Token t = count_syllables(word, lexicon);
    out.counts.push_back(t.syllables);
    if (t.provenance == Provenance::kHeuristic) ++unknown[fold_case(word)];
  }
  out.unknown.reserve(unknown.size());
  for (auto& [w, f] : unknown) out.unknown.push_back({w, f});
  std::stable_sort(out.unknown.begin(), out.unknown.end(),
                   [](const UnknownWord& a, const UnknownWord& b) {
                     return a.frequency > b.frequency;
                   });
  return out;
}

void write_unknown_report(std::ostream& out,
                          const std::vector<UnknownWord>& unknown) {
  for (const auto& u : unknown) out << u.word << '\t' << u.frequency << '\n';
}

SyllableLexicon SyllableLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open lexicon " + path.string());
  return parse(in, path.string());
}

SyllableLexicon SyllableLexicon::parse(std::istream& in,
                                       std::string_view source) {
  SyllableLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    std::ostringstream msg;
    msg << source << ":" << lineno << ": " << why;
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) fail("expected word<TAB>count");
    const std::string_view word = trim(std::string_view(line).substr(0, tab));
    const std::string_view num = trim(std::string_view(line).substr(tab + 1));
    int count = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), count);
    if (ec != std::errc() || ptr != num.data() + num.size())
      fail("bad syllable count '" + std::string(num) + "'");
    try {
      lex.insert(word, count);
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed: " + std::string(source));
  return lex;
}

void SyllableLexicon::insert(std::string_view word, int syllables) {
  word = trim(word);
  if (word.empty()) throw Error(ErrorKind::kInvalidArgument, "empty lexicon key");
  if (syllables < 1)
    throw Error(ErrorKind::kInvalidArgument,
                "syllable count must be >= 1 for '" + std::string(word) + "'");
  auto key = fold_case(word);
  auto [it, inserted] = entries_.emplace(std::move(key), syllables);
  if (!inserted && it->second != syllables)
    throw Error(ErrorKind::kInvalidArgument,
                "conflicting counts for '" + it->first + "'");
}

std::optional<int> SyllableLexicon::lookup(std::string_view word) const {
  auto it = entries_.find(fold_case(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string SyllableLexicon::digest() const {
  std::map<std::string_view, int> sorted;
  for (const auto& [k, v] : entries_) sorted.emplace(k, v);
  std::string canon;
  for (const auto& [k, v] : sorted) {
    canon.append(k);
    canon.push_back('\t');
    canon.append(std::to_string(v));
    canon.push_back('\n');
  }
  return sha256_hex(canon);
}

}  // namespace lineametrics
