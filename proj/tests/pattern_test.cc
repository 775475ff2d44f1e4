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

#include "textarium/pattern.h"

#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <string>

#include "textarium/errors.h"

namespace textarium {
namespace {

std::size_t ErrorPosition(std::string_view pattern) {
  try {
    Pattern p(pattern);
  } catch (const PatternError& e) {
    return e.position();
  }
  ADD_FAILURE() << "pattern compiled: " << pattern;
  return 0;
}

TEST(PatternTest, FullMatchOnly) {
  const Pattern p(R"([Dd]esign\w*)");
  EXPECT_TRUE(p.FullMatch("design"));
  EXPECT_TRUE(p.FullMatch("Designing"));
  EXPECT_FALSE(p.FullMatch("redesign"));
  EXPECT_FALSE(p.FullMatch("design-led"));
}

TEST(PatternTest, Features) {
  EXPECT_TRUE(Pattern("colou?r").FullMatch("color"));
  EXPECT_TRUE(Pattern("colou?r").FullMatch("colour"));
  EXPECT_TRUE(Pattern("(?:ab|cd)+").FullMatch("abcdab"));
  EXPECT_FALSE(Pattern("(?:ab|cd)+").FullMatch(""));
  EXPECT_TRUE(Pattern("a{2,3}").FullMatch("aaa"));
  EXPECT_FALSE(Pattern("a{2,3}").FullMatch("aaaa"));
  EXPECT_TRUE(Pattern("a{2,}").FullMatch("aaaaaa"));
  EXPECT_TRUE(Pattern("[^0-9]+").FullMatch("abc"));
  EXPECT_FALSE(Pattern("[^0-9]+").FullMatch("a1"));
  EXPECT_TRUE(Pattern(R"(\d+\.\d*)").FullMatch("3.14"));
  EXPECT_TRUE(Pattern("^net.*$").FullMatch("networks"));
  EXPECT_TRUE(Pattern("[a-]+").FullMatch("a-a"));
  EXPECT_TRUE(Pattern("x*?").FullMatch("xx"));
  EXPECT_TRUE(Pattern("").FullMatch(""));
  EXPECT_FALSE(Pattern("[]").FullMatch("a"));
}

TEST(PatternTest, CodePointSemantics) {
  EXPECT_TRUE(Pattern("λ.γος").FullMatch("λόγος"));
  EXPECT_TRUE(Pattern("[α-ω]+").FullMatch("λογος"));
  EXPECT_TRUE(Pattern("it.s").FullMatch("it’s"));
  EXPECT_FALSE(Pattern(R"(\w+)").FullMatch("café"));  // ASCII \w
  EXPECT_TRUE(Pattern(R"(é)").FullMatch("é"));
}

TEST(PatternTest, ErrorsCarryPosition) {
  EXPECT_EQ(ErrorPosition("(design"), 0u);
  EXPECT_EQ(ErrorPosition("ab)"), 2u);
  EXPECT_EQ(ErrorPosition("*a"), 0u);
  EXPECT_EQ(ErrorPosition("a**"), 2u);
  EXPECT_EQ(ErrorPosition("ab[cd"), 2u);
  EXPECT_EQ(ErrorPosition("x[z-a]"), 2u);
  EXPECT_EQ(ErrorPosition("abc\\"), 3u);
  EXPECT_EQ(ErrorPosition(R"((a)\1)"), 3u);
  EXPECT_EQ(ErrorPosition("a(?=b)"), 2u);
  EXPECT_EQ(ErrorPosition(R"(\bword)"), 0u);
  EXPECT_EQ(ErrorPosition("a{3,1}"), 1u);
  EXPECT_EQ(ErrorPosition("a{x}"), 1u);
  EXPECT_EQ(ErrorPosition("λλ(λ"), 2u);  // code points, not bytes
  EXPECT_EQ(ErrorPosition(R"(\q)"), 0u);
}

// Random patterns from the shared ASCII subset, checked against std::regex.
class PatternGen {
 public:
  explicit PatternGen(std::mt19937& rng) : rng_(rng) {}

  std::string Alternation(int depth) {
    std::string out = Concat(depth);
    while (Chance(0.2)) out += "|" + Concat(depth);
    return out;
  }

 private:
  bool Chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::string Concat(int depth) {
    std::string out;
    for (int n = Pick(4) + 1; n > 0; --n) out += Repeat(depth);
    return out;
  }

  std::string Repeat(int depth) {
    std::string atom = Atom(depth);
    static const char* kQuant[] = {"", "", "", "*", "+", "?", "{1,2}", "{2}"};
    return atom + kQuant[Pick(8)];
  }

  std::string Atom(int depth) {
    switch (Pick(depth > 0 ? 6 : 5)) {
      case 0:
      case 1:
        return std::string(1, "abc"[Pick(3)]);
      case 2:
        return ".";
      case 3:
        return Chance(0.5) ? "[ab]" : "[^a]";
      case 4:
        return Chance(0.5) ? "\\w" : "[b-c]";
      default:
        return "(?:" + Alternation(depth - 1) + ")";
    }
  }

  std::mt19937& rng_;
};

TEST(PatternProperty, AgreesWithStdRegexOnAscii) {
  std::mt19937 rng(1018);
  PatternGen gen(rng);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int i = 0; i < 400; ++i) {
    const std::string source = gen.Alternation(2);
    const Pattern mine(source);
    const std::regex theirs(source, std::regex::ECMAScript);
    for (int j = 0; j < 25; ++j) {
      std::string subject;
      for (int n = len(rng); n > 0; --n) subject.push_back("abcd"[letter(rng)]);
      ASSERT_EQ(mine.FullMatch(subject), std::regex_match(subject, theirs))
          << "pattern " << source << " subject " << subject;
    }
  }
}

}  // namespace
}  // namespace textarium
