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

#ifndef TEXTARIUM_TEXT_MODEL_H_
#define TEXTARIUM_TEXT_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace textarium {

// A word token. Offsets are bytes into Document::raw(), end exclusive.
struct Token {
  std::size_t index = 0;
  std::string surface;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Inclusive range of token indices.
struct TokenSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
  friend auto operator<=>(const TokenSpan&, const TokenSpan&) = default;
};

// FNV-1a 64 over arbitrary bytes.
std::uint64_t Fnv1a64(std::string_view bytes,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string ToHex16(std::uint64_t value);
bool IsHex16(std::string_view text);

// Converts CRLF and lone CR to LF.
std::string NormalizeLineEndings(std::string_view raw);

// FNV-1a 64 of the LF-normalized text, as 16 lowercase hex digits.
std::string Fingerprint(std::string_view raw);

// Splits text into word tokens: maximal runs of letters and digits (with
// trailing combining marks), joined across an apostrophe (' or U+2019) or a
// hyphen only when a letter sits on both sides. Punctuation and whitespace
// are never tokens.
std::vector<Token> Tokenize(std::string_view raw);

// Immutable source text plus its token table.
class Document {
 public:
  // Strips a leading BOM, normalizes line endings and tokenizes. Throws
  // EncodingError for invalid UTF-8 or NUL bytes.
  explicit Document(std::string_view raw, std::string title = {});

  static Document FromFile(const std::filesystem::path& path);

  const std::string& fingerprint() const { return fingerprint_; }
  const std::string& title() const { return title_; }
  const std::string& raw() const { return raw_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t token_count() const { return tokens_.size(); }

  // Raw text from the first token's start to the last token's end,
  // interior punctuation and whitespace included. Throws RangeError.
  std::string Slice(TokenSpan span) const;

 private:
  std::string fingerprint_;
  std::string title_;
  std::string raw_;
  std::vector<Token> tokens_;
};

}  // namespace textarium

#endif  // TEXTARIUM_TEXT_MODEL_H_
