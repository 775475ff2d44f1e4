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

#include <unicode/utf8.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "textarium/errors.h"
#include "textarium/unicode.h"

namespace textarium {
namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

bool IsJoiner(char32_t cp) {
  return cp == U'\'' || cp == U'\u2019' || cp == U'-' || cp == U'\u2010';
}

struct CodePoint {
  char32_t value;
  std::size_t byte_start;
  std::size_t byte_end;
};

std::vector<CodePoint> DecodeWithOffsets(std::string_view raw) {
  std::vector<CodePoint> out;
  out.reserve(raw.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(raw.data());
  const auto length = static_cast<std::int32_t>(raw.size());
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back({c < 0 ? U'\uFFFD' : static_cast<char32_t>(c),
                   static_cast<std::size_t>(start),
                   static_cast<std::size_t>(i)});
  }
  return out;
}

}  // namespace

std::uint64_t Fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t hash = seed;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string ToHex16(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

bool IsHex16(std::string_view text) {
  if (text.size() != 16) return false;
  for (char c : text) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

std::string NormalizeLineEndings(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      out.push_back(raw[i]);
    }
  }
  return out;
}

std::string Fingerprint(std::string_view raw) {
  return ToHex16(Fnv1a64(NormalizeLineEndings(raw)));
}

std::vector<Token> Tokenize(std::string_view raw) {
  const std::vector<CodePoint> cps = DecodeWithOffsets(raw);
  std::vector<Token> tokens;
  auto is_word = [](char32_t cp) {
    return unicode::IsLetter(cp) || unicode::IsDigit(cp);
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    if (!is_word(cps[i].value)) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    std::size_t last = i;  // inclusive
    ++i;
    while (i < cps.size()) {
      const char32_t cp = cps[i].value;
      if (is_word(cp) || unicode::IsMark(cp)) {
        last = i++;
      } else if (IsJoiner(cp) && i + 1 < cps.size() &&
                 unicode::IsLetter(cps[last].value) &&
                 unicode::IsLetter(cps[i + 1].value)) {
        last = i + 1;
        i += 2;
      } else {
        break;
      }
    }
    Token token;
    token.index = tokens.size();
    token.byte_start = cps[first].byte_start;
    token.byte_end = cps[last].byte_end;
    token.surface = std::string(
        raw.substr(token.byte_start, token.byte_end - token.byte_start));
    tokens.push_back(std::move(token));
  }
  return tokens;
}

Document::Document(std::string_view raw, std::string title)
    : title_(std::move(title)) {
  if (raw.substr(0, kBom.size()) == kBom) raw.remove_prefix(kBom.size());
  if (std::size_t bad = unicode::FindInvalidUtf8(raw);
      bad != std::string_view::npos) {
    throw EncodingError("invalid UTF-8 at byte " + std::to_string(bad), bad);
  }
  if (std::size_t nul = raw.find('\0'); nul != std::string_view::npos) {
    throw EncodingError(
        "NUL byte at " + std::to_string(nul) + " (binary input)", nul);
  }
  raw_ = NormalizeLineEndings(raw);
  fingerprint_ = ToHex16(Fnv1a64(raw_));
  tokens_ = Tokenize(raw_);
}

Document Document::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path.string());
  return Document(buf.str(), path.stem().string());
}

std::string Document::Slice(TokenSpan span) const {
  if (span.start >= tokens_.size()) {
    throw RangeError("token index " + std::to_string(span.start) +
                         " out of range (" + std::to_string(tokens_.size()) +
                         " tokens)",
                     span.start);
  }
  if (span.end >= tokens_.size()) {
    throw RangeError("token index " + std::to_string(span.end) +
                         " out of range (" + std::to_string(tokens_.size()) +
                         " tokens)",
                     span.end);
  }
  if (span.start > span.end) {
    throw RangeError("span " + std::to_string(span.start) + ".." +
                         std::to_string(span.end) + " is reversed",
                     span.start);
  }
  const std::size_t begin = tokens_[span.start].byte_start;
  return raw_.substr(begin, tokens_[span.end].byte_end - begin);
}

}  // namespace textarium
