// Copyright 2026 The Textarium Authors
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

#ifndef TEXTARIUM_TESTS_TEST_ORACLES_H_
#define TEXTARIUM_TESTS_TEST_ORACLES_H_

// Reference implementations used only by tests. They deliberately take a
// different route from the library code they check.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <functional>
#include <regex>
#include <string>
#include <vector>

#include "textarium/analysis.h"
#include "textarium/porter_stemmer.h"
#include "textarium/text_model.h"
#include "textarium/unicode.h"

namespace textarium::testing {

inline std::filesystem::path DataPath(const std::string& relative) {
  return std::filesystem::path(TEXTARIUM_TEST_DATA_DIR) / relative;
}

// Full (m+1)x(n+1) table filled by memoized recursion on prefixes.
inline std::size_t BruteForceEditDistance(const std::u32string& a,
                                          const std::u32string& b) {
  const std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> memo(
      a.size() + 1, std::vector<std::size_t>(b.size() + 1, unset));
  std::function<std::size_t(std::size_t, std::size_t)> d =
      [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == 0) return j;
    if (j == 0) return i;
    std::size_t& slot = memo[i][j];
    if (slot != unset) return slot;
    slot = std::min({d(i - 1, j) + 1, d(i, j - 1) + 1,
                     d(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0u : 1u)});
    return slot;
  };
  return d(a.size(), b.size());
}

inline double BruteForceSimilarity(const std::string& a, const std::string& b) {
  const std::u32string la = unicode::ToLower(unicode::Decode(a));
  const std::u32string lb = unicode::ToLower(unicode::Decode(b));
  const std::size_t longest = std::max(la.size(), lb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(BruteForceEditDistance(la, lb)) /
                   static_cast<double>(longest);
}

// Token-by-token scan. Regex mode goes through std::regex (ECMAScript), so
// it is only meaningful for ASCII subjects and patterns.
inline std::vector<std::size_t> BruteForceRelated(const Document& doc,
                                                  const MatchSpec& spec) {
  auto ascii_stem = [](const std::string& word) {
    std::string lower;
    bool alpha = true;
    for (unsigned char c : word) {
      lower.push_back(static_cast<char>(std::tolower(c)));
      alpha = alpha && std::isalpha(c);
    }
    return alpha ? PorterStem(lower) : lower;
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < doc.token_count(); ++i) {
    const std::string& surface = doc.tokens()[i].surface;
    bool hit = false;
    switch (spec.mode()) {
      case MatchMode::kStem:
        hit = ascii_stem(surface) == ascii_stem(spec.needle());
        break;
      case MatchMode::kSimilarity:
        hit = BruteForceSimilarity(surface, spec.needle()) >= *spec.threshold();
        break;
      case MatchMode::kRegex:
        hit = std::regex_match(surface, std::regex(spec.needle()));
        break;
    }
    if (hit) out.push_back(i);
  }
  return out;
}

}  // namespace textarium::testing

#endif  // TEXTARIUM_TESTS_TEST_ORACLES_H_
