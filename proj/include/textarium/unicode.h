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

#ifndef TEXTARIUM_UNICODE_H_
#define TEXTARIUM_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace textarium::unicode {

// Returns the byte offset of the first invalid sequence, or npos when the
// whole input is well-formed UTF-8.
std::size_t FindInvalidUtf8(std::string_view text);

// Decodes well-formed UTF-8 into scalar values. Invalid sequences decode
// to U+FFFD.
std::u32string Decode(std::string_view text);
std::string Encode(std::u32string_view text);
void AppendUtf8(std::string& out, char32_t cp);

bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
bool IsMark(char32_t cp);
bool IsWhiteSpace(char32_t cp);

// Simple (one-to-one) case mapping, so the scalar count is preserved.
char32_t ToLower(char32_t cp);
std::u32string ToLower(std::u32string_view text);
std::string ToLower(std::string_view utf8);

std::size_t Length(std::string_view utf8);

}  // namespace textarium::unicode

#endif  // TEXTARIUM_UNICODE_H_
