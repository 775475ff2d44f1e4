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

#include "textarium/analysis.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "textarium/porter_stemmer.h"
#include "textarium/unicode.h"

namespace textarium {
namespace {

bool IsLowerAsciiWord(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= 'a' && c <= 'z'; });
}

// Union-find over cluster members.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Stem StemWord(std::string_view word) {
  std::string lower = unicode::ToLower(word);
  if (!IsLowerAsciiWord(lower)) return Stem{std::move(lower)};
  return Stem{PorterStem(lower)};
}

std::string StemPhrase(std::string_view phrase) {
  std::string out;
  for (const Token& token : Tokenize(phrase)) {
    if (!out.empty()) out.push_back(' ');
    out += StemWord(token.surface).value;
  }
  return out;
}

std::size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

double Similarity(std::string_view a, std::string_view b) {
  const std::u32string la = unicode::ToLower(unicode::Decode(a));
  const std::u32string lb = unicode::ToLower(unicode::Decode(b));
  const std::size_t longest = std::max(la.size(), lb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(Levenshtein(la, lb)) /
                   static_cast<double>(longest);
}

MatchSpec::MatchSpec(MatchMode mode, std::string needle)
    : mode_(mode), needle_(std::move(needle)) {}

MatchSpec MatchSpec::ByStem(std::string needle) {
  MatchSpec spec(MatchMode::kStem, std::move(needle));
  spec.needle_stem_ = StemWord(spec.needle_).value;
  return spec;
}

MatchSpec MatchSpec::BySimilarity(std::string needle, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("similarity threshold must lie in [0, 1]");
  }
  MatchSpec spec(MatchMode::kSimilarity, std::move(needle));
  spec.threshold_ = threshold;
  return spec;
}

MatchSpec MatchSpec::ByRegex(std::string pattern) {
  MatchSpec spec(MatchMode::kRegex, std::move(pattern));
  spec.pattern_.emplace(spec.needle_);
  return spec;
}

bool MatchSpec::Matches(std::string_view surface) const {
  switch (mode_) {
    case MatchMode::kStem:
      return StemWord(surface).value == needle_stem_;
    case MatchMode::kSimilarity:
      return Similarity(surface, needle_) >= *threshold_;
    case MatchMode::kRegex:
      return pattern_->FullMatch(surface);
  }
  return false;
}

std::vector<std::size_t> FindRelated(const Document& doc,
                                     const MatchSpec& spec) {
  std::vector<std::size_t> hits;
  for (const Token& token : doc.tokens()) {
    if (spec.Matches(token.surface)) hits.push_back(token.index);
  }
  return hits;
}

std::vector<Suggestion> SuggestGroups(
    const std::vector<AnnotationText>& annotations, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("suggestion threshold must lie in (0, 1]");
  }
  // Sorting by id first makes everything below independent of input order.
  std::vector<AnnotationText> sorted = annotations;
  std::sort(sorted.begin(), sorted.end(),
            [](const AnnotationText& a, const AnnotationText& b) {
              return a.id < b.id;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].id == sorted[i - 1].id) {
      throw std::invalid_argument("duplicate annotation id " +
                                  std::to_string(sorted[i].id));
    }
  }

  const std::size_t n = sorted.size();
  std::vector<std::string> stems(n);
  for (std::size_t i = 0; i < n; ++i) stems[i] = StemPhrase(sorted[i].surface);

  std::vector<std::vector<double>> sim(n, std::vector<double>(n, 1.0));
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sim[i][j] = sim[j][i] = Similarity(stems[i], stems[j]);
      if (sim[i][j] >= threshold) sets.Union(i, j);
    }
  }

  // Roots are the smallest member index, so iterating i in order visits
  // clusters by smallest member id.
  std::vector<Suggestion> out;
  for (std::size_t root = 0; root < n; ++root) {
    if (sets.Find(root) != root) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = root; i < n; ++i) {
      if (sets.Find(i) == root) members.push_back(i);
    }
    if (members.size() < 2) continue;

    Suggestion suggestion;
    suggestion.score = 1.0;
    suggestion.proposed_name = stems[members.front()];
    for (std::size_t a = 0; a < members.size(); ++a) {
      suggestion.member_ids.push_back(sorted[members[a]].id);
      suggestion.proposed_name =
          std::min(suggestion.proposed_name, stems[members[a]]);
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        suggestion.score =
            std::min(suggestion.score, sim[members[a]][members[b]]);
      }
    }
    out.push_back(std::move(suggestion));
  }
  return out;
}

}  // namespace textarium
