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

#ifndef TEXTARIUM_PATTERN_H_
#define TEXTARIUM_PATTERN_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace textarium {

// A compiled regular expression in a deliberately small dialect that the
// browser's RegExp engine interprets identically:
//
//   literals, escapes \. \\ \( ...    .          any code point but \n \r
//   [abc] [^a-z] classes              \d \D \w \W \s \S (\w, \d are ASCII)
//   * + ? {n} {n,} {n,m} (optional trailing ? accepted, meaningless here)
//   (...) (?:...)  a|b   ^ $
//
// Backreferences, lookaround and word boundaries are rejected. Matching is
// always against the whole subject, over Unicode code points.
class Pattern {
 public:
  // Throws PatternError carrying the code-point position of the fault.
  explicit Pattern(std::string_view source);
  ~Pattern();
  Pattern(const Pattern&);
  Pattern& operator=(const Pattern&);
  Pattern(Pattern&&) noexcept;
  Pattern& operator=(Pattern&&) noexcept;

  const std::string& source() const { return source_; }

  bool FullMatch(std::string_view subject) const;
  bool FullMatch(std::u32string_view subject) const;

  struct Program;

 private:
  std::string source_;
  std::unique_ptr<Program> program_;
};

}  // namespace textarium

#endif  // TEXTARIUM_PATTERN_H_
