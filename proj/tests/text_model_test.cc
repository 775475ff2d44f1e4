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

#include "textarium/text_model.h"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "textarium/errors.h"

namespace textarium {
namespace {

TEST(TokenizeTest, EmptyInputHasNoTokens) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("  ?! -- ''").empty());
}

TEST(TokenizeTest, TitleSplitsOnSpacesAndDropsPunctuation) {
  const std::vector<Token> tokens = Tokenize("A Cautious Prometheus?");
  const std::vector<Token> expected = {
      {0, "A", 0, 1},
      {1, "Cautious", 2, 10},
      {2, "Prometheus", 11, 21},
  };
  EXPECT_EQ(tokens, expected);
}

TEST(TokenizeTest, KeepsLetterFlankedHyphenAndApostrophe) {
  const std::vector<Token> tokens = Tokenize("re-design it’s");
  const std::vector<Token> expected = {
      {0, "re-design", 0, 9},
      {1, "it’s", 10, 16},
  };
  EXPECT_EQ(tokens, expected);
}

TEST(TokenizeTest, JoinersNeedLettersOnBothSides) {
  auto surfaces = [](std::string_view raw) {
    std::vector<std::string> out;
    for (const Token& t : Tokenize(raw)) out.push_back(t.surface);
    return out;
  };
  EXPECT_EQ(surfaces("1980-1990"), (std::vector<std::string>{"1980", "1990"}));
  EXPECT_EQ(surfaces("'quoted' -dash- x--y"),
            (std::vector<std::string>{"quoted", "dash", "x", "y"}));
  EXPECT_EQ(surfaces("designers' work"),
            (std::vector<std::string>{"designers", "work"}));
  EXPECT_EQ(surfaces("Vol2 a1b"), (std::vector<std::string>{"Vol2", "a1b"}));
}

TEST(TokenizeTest, UnicodeLettersAndCombiningMarks) {
  std::vector<std::string> out;
  // "café" with a decomposed accent, Greek, and CJK.
  for (const Token& t : Tokenize("café λόγος 文字.")) out.push_back(t.surface);
  EXPECT_EQ(out, (std::vector<std::string>{"café", "λόγος", "文字"}));
}

TEST(FingerprintTest, FnvReferenceValues) {
  EXPECT_EQ(Fingerprint(""), "cbf29ce484222325");
  EXPECT_EQ(Fingerprint("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(Fingerprint("A Cautious Prometheus?"), "500e2ced067d1d98");
}

TEST(FingerprintTest, LineEndingsDoNotMatter) {
  EXPECT_EQ(Fingerprint("line one\r\nline two\r\n"), "69e70ffc7ee5f13f");
  EXPECT_EQ(Fingerprint("line one\nline two\n"), "69e70ffc7ee5f13f");
  EXPECT_EQ(Fingerprint("line one\rline two\r"), "69e70ffc7ee5f13f");
}

TEST(DocumentTest, StripsBomAndNormalizes) {
  const Document doc("\xEF\xBB\xBFone\r\ntwo", "t");
  EXPECT_EQ(doc.raw(), "one\ntwo");
  EXPECT_EQ(doc.fingerprint(), Fingerprint("one\ntwo"));
  EXPECT_EQ(doc.token_count(), 2u);
  EXPECT_EQ(doc.title(), "t");
}

TEST(DocumentTest, RejectsInvalidUtf8AndBinary) {
  EXPECT_THROW(Document("ok \xC3\x28"), EncodingError);
  EXPECT_THROW(Document(std::string("a\0b", 3)), EncodingError);
}

TEST(DocumentTest, SliceKeepsInteriorPunctuation) {
  const Document doc("A Cautious Prometheus?");
  EXPECT_EQ(doc.Slice({1, 2}), "Cautious Prometheus");
  EXPECT_EQ(doc.Slice({0, 0}), "A");
  const Document longer("one, two; three: four five six");
  EXPECT_EQ(longer.Slice({0, 2}), "one, two; three");
}

TEST(DocumentTest, SliceRangeErrorsNameTheIndex) {
  const Document doc("zero one two three four five six");
  try {
    doc.Slice({5, 3});
    FAIL() << "reversed span accepted";
  } catch (const RangeError& e) {
    EXPECT_EQ(e.offending_index(), 5u);
  }
  try {
    doc.Slice({2, 9});
    FAIL() << "out of range span accepted";
  } catch (const RangeError& e) {
    EXPECT_EQ(e.offending_index(), 9u);
  }
}

// Random texts mixing words, joiners, punctuation and multibyte letters.
std::string RandomText(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "design", "Designed", "it’s", "re-design", " ",  "  ",    "\n",
      ",",      "?",        "-",    "'",         "’",  "λόγος", "1980",
      "é",      "x",        "--",   "\r\n",      "\t", "文"};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  std::string out;
  for (int n = len(rng); n > 0; --n) out += pieces[pick(rng)];
  return out;
}

TEST(TokenizeProperty, TokensAnchorBackIntoTheText) {
  std::mt19937 rng(20261018);
  for (int iter = 0; iter < 500; ++iter) {
    const Document doc(RandomText(rng));
    const auto& tokens = doc.tokens();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      ASSERT_EQ(t.index, i);
      ASSERT_LT(t.byte_start, t.byte_end);
      ASSERT_EQ(doc.raw().substr(t.byte_start, t.byte_end - t.byte_start),
                t.surface);
      ASSERT_EQ(doc.Slice({i, i}), t.surface);
      if (i > 0) ASSERT_LE(tokens[i - 1].byte_end, t.byte_start);
    }
    ASSERT_EQ(Tokenize(doc.raw()), tokens);
    ASSERT_EQ(Document(doc.raw()).fingerprint(), doc.fingerprint());
  }
}

}  // namespace
}  // namespace textarium
