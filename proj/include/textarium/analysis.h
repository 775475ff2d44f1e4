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

#ifndef TEXTARIUM_ANALYSIS_H_
#define TEXTARIUM_ANALYSIS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textarium/pattern.h"
#include "textarium/text_model.h"

namespace textarium {

inline constexpr double kDefaultSimilarityThreshold = 0.80;
inline constexpr double kDefaultSuggestionThreshold = 0.75;

struct Stem {
  std::string value;

  friend bool operator==(const Stem&, const Stem&) = default;
  friend auto operator<=>(const Stem&, const Stem&) = default;
};

// Lowercases, then applies Porter when the result is made only of a-z.
// Anything else (digits, hyphenated or apostrophised words, non-Latin
// letters) is returned lowercased and otherwise untouched.
Stem StemWord(std::string_view word);

// Stems every token of a phrase and joins the stems with single spaces.
// Used to compare multi-word annotations.
std::string StemPhrase(std::string_view phrase);

// Edit distance (unit insert/delete/substitute) over code points.
std::size_t Levenshtein(std::u32string_view a, std::u32string_view b);

// 1 - levenshtein / max length, on lowercased code points. Two empty
// strings are identical (1.0).
double Similarity(std::string_view a, std::string_view b);

enum class MatchMode { kStem, kSimilarity, kRegex };

// What to look for in a document. Build through the factories, which
// enforce that the threshold only exists for similarity matches and that
// regex needles compile.
class MatchSpec {
 public:
  static MatchSpec ByStem(std::string needle);
  // Throws std::invalid_argument unless 0 <= threshold <= 1.
  static MatchSpec BySimilarity(std::string needle,
                                double threshold = kDefaultSimilarityThreshold);
  // Throws PatternError.
  static MatchSpec ByRegex(std::string pattern);

  MatchMode mode() const { return mode_; }
  const std::string& needle() const { return needle_; }
  std::optional<double> threshold() const { return threshold_; }

  // The mode predicate for a single token surface.
  bool Matches(std::string_view surface) const;

 private:
  MatchSpec(MatchMode mode, std::string needle);

  MatchMode mode_;
  std::string needle_;
  std::optional<double> threshold_;
  std::string needle_stem_;
  std::optional<Pattern> pattern_;
};

// Ascending indices of every token satisfying `spec`. Already-annotated
// tokens are included; the caller filters for display.
std::vector<std::size_t> FindRelated(const Document& doc,
                                     const MatchSpec& spec);

struct AnnotationText {
  std::size_t id = 0;
  std::string surface;
};

struct Suggestion {
  std::vector<std::size_t> member_ids;  // ascending, size >= 2
  std::string proposed_name;
  double score = 0.0;

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

// Single-linkage clusters of annotations whose stems are at least
// `threshold` similar. Only clusters with two or more members are
// returned, ordered by smallest member id. The name is the smallest
// member stem; the score is the weakest pairwise similarity inside the
// cluster. Throws std::invalid_argument for duplicate ids or a threshold
// outside (0, 1].
std::vector<Suggestion> SuggestGroups(
    const std::vector<AnnotationText>& annotations,
    double threshold = kDefaultSuggestionThreshold);

}  // namespace textarium

#endif  // TEXTARIUM_ANALYSIS_H_
