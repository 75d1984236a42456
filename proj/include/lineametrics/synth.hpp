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

// Seeded generators for synthetic corpora.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard (the 10000th draw from the default seed is
// 9981545732273789042). Draws are turned into doubles as (x >> 11) * 2^-53;
// no std:: distribution is used, so output is identical on every
// conforming platform.

#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "lineametrics/corpus.hpp"
#include "lineametrics/linestats.hpp"

namespace lineametrics {

inline constexpr int kGeometricTruncation = 40;

class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// I.i.d. lengths with P(n) proportional to q (1-q)^(n-1), n = 1..40.
/// Throws Error{kInvalidArgument} unless 0 < q <= 1 and words >= 1.
ProseDocument gen_geometric_prose(double q, std::uint64_t words, std::uint64_t seed);

/// Each line independently gets a boundary after position n with
/// probability x_n; position N always closes the line.
VerseDocument gen_lines_from_x(const XDistribution& x, std::uint64_t lines,
                               std::uint64_t seed);

/// "la" repeated n times. Every repetition the repo lexicon lists ("la",
/// "lala") carries the same count as the heuristic gives.
std::string placeholder_word(int syllables);

/// Placeholder words joined by single spaces, 20 words per line.
std::string render_prose(const ProseDocument& doc);
/// One placeholder line per verse line.
std::string render_verse(const VerseDocument& doc);

}  // namespace lineametrics
