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

#include "textarium/markdown.h"

#include <unicode/uchar.h>
#include <unicode/ustring.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <list>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "textarium/unicode.h"

namespace textarium::markdown {
namespace {

bool IsAsciiPunct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

bool IsSpaceOrTab(char c) { return c == ' ' || c == '\t'; }

bool IsLineSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsBlankText(std::string_view s) {
  return std::all_of(s.begin(), s.end(), IsLineSpace);
}

bool IsAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAlnum(char c) { return IsAlpha(c) || IsDigit(c); }

char AsciiLower(char c) { return (c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c; }

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = AsciiLower(c);
  return out;
}

std::string_view TrimSpace(std::string_view s) {
  while (!s.empty() && IsLineSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsLineSpace(s.back())) s.remove_suffix(1);
  return s;
}

// Code point before byte offset `pos`, or '\n' at the start.
char32_t CodePointBefore(std::string_view s, std::size_t pos) {
  if (pos == 0) return U'\n';
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c = 0;
  U8_PREV(reinterpret_cast<const uint8_t*>(s.data()), 0, i, c);
  return c < 0 ? U'\uFFFD' : static_cast<char32_t>(c);
}

// Code point at byte offset `pos`, or '\n' at the end.
char32_t CodePointAt(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return U'\n';
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c = 0;
  U8_NEXT(reinterpret_cast<const uint8_t*>(s.data()), i,
          static_cast<int32_t>(s.size()), c);
  return c < 0 ? U'\uFFFD' : static_cast<char32_t>(c);
}

bool IsUnicodeWhitespace(char32_t c) {
  return c == U'\t' || c == U'\n' || c == U'\f' || c == U'\r' || c == U' ' ||
         u_charType(static_cast<UChar32>(c)) == U_SPACE_SEPARATOR;
}

bool IsUnicodePunct(char32_t c) {
  if (c < 0x80) return IsAsciiPunct(static_cast<char>(c));
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) &
          (U_GC_P_MASK | U_GC_S_MASK)) != 0;
}

// Unicode default case folding.
std::string FoldCase(const std::string& utf8) {
  UErrorCode status = U_ZERO_ERROR;
  int32_t length = 0;
  std::u16string wide(utf8.size() + 1, u'\0');
  u_strFromUTF8(wide.data(), static_cast<int32_t>(wide.size()), &length,
                utf8.data(), static_cast<int32_t>(utf8.size()), &status);
  if (U_FAILURE(status)) return unicode::ToLower(std::string_view(utf8));
  wide.resize(static_cast<std::size_t>(length));
  std::u16string folded(wide.size() * 3 + 1, u'\0');
  length = u_strFoldCase(folded.data(), static_cast<int32_t>(folded.size()),
                         wide.data(), static_cast<int32_t>(wide.size()),
                         U_FOLD_CASE_DEFAULT, &status);
  if (U_FAILURE(status)) return unicode::ToLower(std::string_view(utf8));
  folded.resize(static_cast<std::size_t>(length));
  std::string out(folded.size() * 3 + 1, '\0');
  u_strToUTF8(out.data(), static_cast<int32_t>(out.size()), &length,
              folded.data(), static_cast<int32_t>(folded.size()), &status);
  if (U_FAILURE(status)) return unicode::ToLower(std::string_view(utf8));
  out.resize(static_cast<std::size_t>(length));
  return out;
}

std::string NormalizeLabel(std::string_view label) {
  std::string collapsed;
  bool space = false;
  for (char c : TrimSpace(label)) {
    if (IsLineSpace(c)) {
      space = true;
      continue;
    }
    if (space) collapsed.push_back(' ');
    space = false;
    collapsed.push_back(c);
  }
  return FoldCase(collapsed);
}

struct NamedEntity {
  std::string_view name;
  std::string_view utf8;
};

constexpr NamedEntity kNamedEntities[] = {
#include "html_entities.inc"
};

// Decodes an entity or numeric character reference at `pos` into `out`;
// returns its length or 0.
std::size_t DecodeEntity(std::string_view s, std::size_t pos,
                         std::string& out) {
  if (pos >= s.size() || s[pos] != '&') return 0;
  std::size_t i = pos + 1;
  if (i < s.size() && s[i] == '#') {
    ++i;
    const bool hex = i < s.size() && (s[i] == 'x' || s[i] == 'X');
    if (hex) ++i;
    const std::size_t first = i;
    uint32_t value = 0;
    while (i < s.size() &&
           (hex ? std::isxdigit(static_cast<unsigned char>(s[i])) != 0
                : IsDigit(s[i]))) {
      if (value <= 0x10FFFF) {
        const char c = AsciiLower(s[i]);
        value = value * (hex ? 16 : 10) +
                static_cast<uint32_t>(IsDigit(c) ? c - '0' : c - 'a' + 10);
      }
      ++i;
    }
    const std::size_t digits = i - first;
    if (digits == 0 || digits > (hex ? 6u : 7u)) return 0;
    if (i >= s.size() || s[i] != ';') return 0;
    if (value == 0 || value > 0x10FFFF ||
        (value >= 0xD800 && value <= 0xDFFF)) {
      value = 0xFFFD;
    }
    unicode::AppendUtf8(out, static_cast<char32_t>(value));
    return i + 1 - pos;
  }
  while (i < s.size() && IsAlnum(s[i])) ++i;
  if (i == pos + 1 || i >= s.size() || s[i] != ';') return 0;
  const std::string_view name = s.substr(pos + 1, i - pos - 1);
  const auto* end = std::end(kNamedEntities);
  const auto* it = std::lower_bound(
      std::begin(kNamedEntities), end, name,
      [](const NamedEntity& e, std::string_view n) { return e.name < n; });
  if (it == end || it->name != name) return 0;
  out += it->utf8;
  return i + 1 - pos;
}

// Resolves backslash escapes and entity references.
std::string Unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && IsAsciiPunct(s[i + 1])) {
      out.push_back(s[++i]);
    } else if (std::size_t n = DecodeEntity(s, i, out)) {
      i += n - 1;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Raw HTML matching shared by inline HTML and HTML block type 7.

std::size_t SkipSpaces(std::string_view s, std::size_t i) {
  while (i < s.size() && IsLineSpace(s[i])) ++i;
  return i;
}

// Open tag at `pos` ('<' included); returns length or 0.
std::size_t MatchOpenTag(std::string_view s, std::size_t pos) {
  std::size_t i = pos + 1;
  if (i >= s.size() || !IsAlpha(s[i])) return 0;
  while (i < s.size() && (IsAlnum(s[i]) || s[i] == '-')) ++i;
  while (true) {
    const std::size_t ws_end = SkipSpaces(s, i);
    const bool had_space = ws_end > i;
    std::size_t j = ws_end;
    if (j < s.size() && s[j] == '>') return j + 1 - pos;
    if (j + 1 < s.size() && s[j] == '/' && s[j + 1] == '>') return j + 2 - pos;
    if (!had_space || j >= s.size()) return 0;
    const char c = s[j];
    if (!(IsAlpha(c) || c == '_' || c == ':')) return 0;
    while (j < s.size() && (IsAlnum(s[j]) || s[j] == '_' || s[j] == '.' ||
                            s[j] == ':' || s[j] == '-')) {
      ++j;
    }
    i = j;
    std::size_t k = SkipSpaces(s, j);
    if (k < s.size() && s[k] == '=') {
      k = SkipSpaces(s, k + 1);
      if (k >= s.size()) return 0;
      if (s[k] == '"' || s[k] == '\'') {
        const std::size_t close = s.find(s[k], k + 1);
        if (close == std::string_view::npos) return 0;
        i = close + 1;
      } else {
        const std::size_t start = k;
        while (k < s.size() && !IsLineSpace(s[k]) && s[k] != '"' &&
               s[k] != '\'' && s[k] != '=' && s[k] != '<' && s[k] != '>' &&
               s[k] != '`') {
          ++k;
        }
        if (k == start) return 0;
        i = k;
      }
    }
  }
}

std::size_t MatchCloseTag(std::string_view s, std::size_t pos) {
  std::size_t i = pos + 2;
  if (s.substr(pos, 2) != "</" || i >= s.size() || !IsAlpha(s[i])) return 0;
  while (i < s.size() && (IsAlnum(s[i]) || s[i] == '-')) ++i;
  i = SkipSpaces(s, i);
  if (i < s.size() && s[i] == '>') return i + 1 - pos;
  return 0;
}

std::size_t MatchRawHtml(std::string_view s, std::size_t pos) {
  if (pos >= s.size() || s[pos] != '<') return 0;
  if (std::size_t n = MatchOpenTag(s, pos)) return n;
  if (std::size_t n = MatchCloseTag(s, pos)) return n;
  const std::string_view rest = s.substr(pos);
  auto until = [&](std::string_view open, std::string_view close,
                   std::size_t from) -> std::size_t {
    if (rest.substr(0, open.size()) != open) return 0;
    const std::size_t end = rest.find(close, from);
    return end == std::string_view::npos ? 0 : end + close.size();
  };
  if (rest.substr(0, 4) == "<!--") {
    if (rest.substr(0, 5) == "<!-->") return 5;
    if (rest.substr(0, 6) == "<!--->") return 6;
    return until("<!--", "-->", 4);
  }
  if (std::size_t n = until("<?", "?>", 2)) return n;
  if (std::size_t n = until("<![CDATA[", "]]>", 9)) return n;
  if (rest.size() > 2 && rest[1] == '!' && IsAlpha(rest[2])) {
    return until("<!", ">", 2);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Link components.

// Destination at `pos`; on success sets `out` and returns the end offset.
std::optional<std::size_t> ParseDestination(std::string_view s, std::size_t pos,
                                            std::string& out) {
  if (pos < s.size() && s[pos] == '<') {
    std::size_t i = pos + 1;
    while (i < s.size()) {
      const char c = s[i];
      if (c == '\\' && i + 1 < s.size() && IsAsciiPunct(s[i + 1])) {
        i += 2;
        continue;
      }
      if (c == '\n' || c == '<') return std::nullopt;
      if (c == '>') {
        out = Unescape(s.substr(pos + 1, i - pos - 1));
        return i + 1;
      }
      ++i;
    }
    return std::nullopt;
  }
  std::size_t i = pos;
  int depth = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\\' && i + 1 < s.size() && IsAsciiPunct(s[i + 1])) {
      i += 2;
      continue;
    }
    if (static_cast<unsigned char>(c) <= 0x20 || c == 0x7f) break;
    if (c == '(') {
      if (++depth > 32) return std::nullopt;
    } else if (c == ')') {
      if (depth == 0) break;
      --depth;
    }
    ++i;
  }
  if (i == pos || depth != 0) return std::nullopt;
  out = Unescape(s.substr(pos, i - pos));
  return i;
}

std::optional<std::size_t> ParseTitle(std::string_view s, std::size_t pos,
                                      std::string& out) {
  if (pos >= s.size()) return std::nullopt;
  const char open = s[pos];
  char close = 0;
  if (open == '"' || open == '\'') {
    close = open;
  } else if (open == '(') {
    close = ')';
  } else {
    return std::nullopt;
  }
  for (std::size_t i = pos + 1; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && IsAsciiPunct(s[i + 1])) {
      ++i;
      continue;
    }
    if (open == '(' && s[i] == '(') return std::nullopt;
    if (s[i] == close) {
      out = Unescape(s.substr(pos + 1, i - pos - 1));
      return i + 1;
    }
  }
  return std::nullopt;
}

// Link label "[...]" at `pos`; sets `label` to the inner text.
std::optional<std::size_t> ParseLabel(std::string_view s, std::size_t pos,
                                      std::string& label) {
  if (pos >= s.size() || s[pos] != '[') return std::nullopt;
  for (std::size_t i = pos + 1; i < s.size() && i - pos <= 1000; ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && IsAsciiPunct(s[i + 1])) {
      ++i;
      continue;
    }
    if (s[i] == '[') return std::nullopt;
    if (s[i] == ']') {
      label = std::string(s.substr(pos + 1, i - pos - 1));
      return i + 1;
    }
  }
  return std::nullopt;
}

// Inline link tail "(dest "title")" at `pos`.
std::optional<std::size_t> ParseInlineLinkTail(std::string_view s,
                                               std::size_t pos,
                                               LinkTarget& target) {
  if (pos >= s.size() || s[pos] != '(') return std::nullopt;
  std::size_t i = SkipSpaces(s, pos + 1);
  target = {};
  if (i < s.size() && s[i] == ')') return i + 1;
  std::string dest;
  auto dest_end = ParseDestination(s, i, dest);
  if (!dest_end) return std::nullopt;
  i = *dest_end;
  const std::size_t after_space = SkipSpaces(s, i);
  std::string title;
  if (after_space > i) {
    if (auto end = ParseTitle(s, after_space, title)) i = *end;
  }
  i = SkipSpaces(s, i);
  if (i >= s.size() || s[i] != ')') return std::nullopt;
  target.destination = std::move(dest);
  target.title = std::move(title);
  return i + 1;
}

// ---------------------------------------------------------------------------
// Inline parsing.

struct Inline {
  enum class Kind {
    kText,
    kSoftBreak,
    kHardBreak,
    kCode,
    kHtml,
    kEmph,
    kStrong,
    kLink,
    kImage,
  };
  Kind kind = Kind::kText;
  std::string text;
  LinkTarget target;
  std::list<Inline> children;
};

using InlineList = std::list<Inline>;

Inline Leaf(Inline::Kind kind, std::string text = {}) {
  Inline node;
  node.kind = kind;
  node.text = std::move(text);
  return node;
}

struct Delimiter {
  InlineList::iterator node;
  char ch = 0;
  std::size_t count = 0;
  std::size_t original = 0;
  bool can_open = false;
  bool can_close = false;
  bool active = true;
  bool image = false;
  std::size_t label_start = 0;
  std::size_t seq = 0;
};

class InlineParser {
 public:
  InlineParser(std::string_view text, const LinkReferences& refs)
      : s_(text), refs_(refs) {}

  InlineList Parse() {
    while (pos_ < s_.size()) Step();
    FlushText();
    ProcessEmphasis(0);
    return std::move(nodes_);
  }

 private:
  void Step() {
    const char c = s_[pos_];
    switch (c) {
      case '\\':
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '\n') {
          FlushText();
          Push(Leaf(Inline::Kind::kHardBreak));
          pos_ = SkipLeadingSpaces(pos_ + 2);
        } else if (pos_ + 1 < s_.size() && IsAsciiPunct(s_[pos_ + 1])) {
          text_.push_back(s_[pos_ + 1]);
          pos_ += 2;
        } else {
          text_.push_back('\\');
          ++pos_;
        }
        return;
      case '`':
        CodeSpan();
        return;
      case '*':
      case '_':
        EmphasisRun();
        return;
      case '[':
        OpenBracket(false, pos_ + 1);
        ++pos_;
        return;
      case '!':
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '[') {
          OpenBracket(true, pos_ + 2);
          pos_ += 2;
        } else {
          text_.push_back('!');
          ++pos_;
        }
        return;
      case ']':
        CloseBracket();
        return;
      case '<':
        AngleBracket();
        return;
      case '&':
        if (std::size_t n = DecodeEntity(s_, pos_, text_)) {
          pos_ += n;
        } else {
          text_.push_back('&');
          ++pos_;
        }
        return;
      case '\n':
        LineBreak();
        return;
      default:
        text_.push_back(c);
        ++pos_;
    }
  }

  std::size_t SkipLeadingSpaces(std::size_t i) const {
    while (i < s_.size() && IsSpaceOrTab(s_[i])) ++i;
    return i;
  }

  void FlushText() {
    if (text_.empty()) return;
    Push(Leaf(Inline::Kind::kText, std::move(text_)));
    text_.clear();
  }

  InlineList::iterator Push(Inline node) {
    nodes_.push_back(std::move(node));
    return std::prev(nodes_.end());
  }

  void LineBreak() {
    std::size_t spaces = 0;
    while (!text_.empty() && text_.back() == ' ') {
      text_.pop_back();
      ++spaces;
    }
    FlushText();
    Push(Leaf(spaces >= 2 ? Inline::Kind::kHardBreak
                          : Inline::Kind::kSoftBreak));
    pos_ = SkipLeadingSpaces(pos_ + 1);
  }

  void CodeSpan() {
    std::size_t n = 0;
    while (pos_ + n < s_.size() && s_[pos_ + n] == '`') ++n;
    std::size_t i = pos_ + n;
    while (i < s_.size()) {
      if (s_[i] != '`') {
        ++i;
        continue;
      }
      std::size_t m = 0;
      while (i + m < s_.size() && s_[i + m] == '`') ++m;
      if (m == n) {
        std::string content(s_.substr(pos_ + n, i - pos_ - n));
        std::replace(content.begin(), content.end(), '\n', ' ');
        if (content.size() >= 2 && content.front() == ' ' &&
            content.back() == ' ' &&
            content.find_first_not_of(' ') != std::string::npos) {
          content = content.substr(1, content.size() - 2);
        }
        FlushText();
        Push(Leaf(Inline::Kind::kCode, std::move(content)));
        pos_ = i + m;
        return;
      }
      i += m;
    }
    text_.append(n, '`');
    pos_ += n;
  }

  void EmphasisRun() {
    const char c = s_[pos_];
    std::size_t n = 0;
    while (pos_ + n < s_.size() && s_[pos_ + n] == c) ++n;
    const char32_t before = CodePointBefore(s_, pos_);
    const char32_t after = CodePointAt(s_, pos_ + n);
    const bool ws_before = IsUnicodeWhitespace(before);
    const bool ws_after = IsUnicodeWhitespace(after);
    const bool p_before = IsUnicodePunct(before);
    const bool p_after = IsUnicodePunct(after);
    const bool left = !ws_after && (!p_after || ws_before || p_before);
    const bool right = !ws_before && (!p_before || ws_after || p_after);
    Delimiter d;
    d.ch = c;
    d.count = d.original = n;
    if (c == '*') {
      d.can_open = left;
      d.can_close = right;
    } else {
      d.can_open = left && (!right || p_before);
      d.can_close = right && (!left || p_after);
    }
    FlushText();
    d.node = Push(Leaf(Inline::Kind::kText, std::string(n, c)));
    d.seq = next_seq_++;
    stack_.push_back(d);
    pos_ += n;
  }

  void OpenBracket(bool image, std::size_t label_start) {
    FlushText();
    Delimiter d;
    d.ch = '[';
    d.image = image;
    d.label_start = label_start;
    d.node = Push(Leaf(Inline::Kind::kText, image ? "![" : "["));
    d.seq = next_seq_++;
    stack_.push_back(d);
  }

  void CloseBracket() {
    FlushText();
    std::size_t opener = stack_.size();
    for (std::size_t i = stack_.size(); i > 0; --i) {
      if (stack_[i - 1].ch == '[') {
        opener = i - 1;
        break;
      }
    }
    if (opener == stack_.size()) {
      text_.push_back(']');
      ++pos_;
      return;
    }
    if (!stack_[opener].active) {
      stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(opener));
      text_.push_back(']');
      ++pos_;
      return;
    }
    const std::size_t after = pos_ + 1;
    LinkTarget target;
    std::optional<std::size_t> end = ParseInlineLinkTail(s_, after, target);
    if (!end) {
      std::string label;
      std::optional<std::size_t> label_end = ParseLabel(s_, after, label);
      if (!label_end || IsBlankText(label)) {
        // Collapsed "[]" or shortcut reference: the bracket text is the label.
        label = std::string(s_.substr(stack_[opener].label_start,
                                      pos_ - stack_[opener].label_start));
        if (!label_end) label_end = after;
      }
      auto it = refs_.find(NormalizeLabel(label));
      if (it != refs_.end() && !IsBlankText(label) && label.size() <= 999) {
        target = it->second;
        end = label_end;
      }
    }
    if (!end) {
      stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(opener));
      text_.push_back(']');
      ++pos_;
      return;
    }
    const Delimiter open = stack_[opener];
    ProcessEmphasis(opener + 1);
    stack_.resize(opener);
    Inline link;
    link.kind = open.image ? Inline::Kind::kImage : Inline::Kind::kLink;
    link.target = std::move(target);
    link.children.splice(link.children.end(), nodes_, std::next(open.node),
                         nodes_.end());
    nodes_.erase(open.node);
    nodes_.push_back(std::move(link));
    if (!open.image) {
      for (Delimiter& d : stack_) {
        if (d.ch == '[' && !d.image) d.active = false;
      }
    }
    pos_ = *end;
  }

  void AngleBracket() {
    // Autolinks.
    const std::size_t close = s_.find('>', pos_ + 1);
    if (close != std::string_view::npos) {
      const std::string_view inner = s_.substr(pos_ + 1, close - pos_ - 1);
      if (IsUriAutolink(inner) || IsEmailAutolink(inner)) {
        Inline link;
        link.kind = Inline::Kind::kLink;
        link.target.destination = IsUriAutolink(inner)
                                      ? std::string(inner)
                                      : "mailto:" + std::string(inner);
        link.children.push_back(Leaf(Inline::Kind::kText, std::string(inner)));
        FlushText();
        Push(std::move(link));
        pos_ = close + 1;
        return;
      }
    }
    if (std::size_t n = MatchRawHtml(s_, pos_)) {
      FlushText();
      Push(Leaf(Inline::Kind::kHtml, std::string(s_.substr(pos_, n))));
      pos_ += n;
      return;
    }
    text_.push_back('<');
    ++pos_;
  }

  static bool IsUriAutolink(std::string_view s) {
    const std::size_t colon = s.find(':');
    if (colon == std::string_view::npos || colon < 2 || colon > 32) {
      return false;
    }
    if (!IsAlpha(s[0])) return false;
    for (std::size_t i = 1; i < colon; ++i) {
      if (!(IsAlnum(s[i]) || s[i] == '+' || s[i] == '.' || s[i] == '-')) {
        return false;
      }
    }
    for (char c : s.substr(colon + 1)) {
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '>') {
        return false;
      }
    }
    return true;
  }

  static bool IsEmailAutolink(std::string_view s) {
    const std::size_t at = s.find('@');
    if (at == std::string_view::npos || at == 0) return false;
    static constexpr std::string_view kLocal = ".!#$%&'*+/=?^_`{|}~-";
    for (char c : s.substr(0, at)) {
      if (!IsAlnum(c) && kLocal.find(c) == std::string_view::npos) return false;
    }
    std::string_view domain = s.substr(at + 1);
    if (domain.empty()) return false;
    std::size_t label = 0;
    for (std::size_t i = 0; i <= domain.size(); ++i) {
      if (i == domain.size() || domain[i] == '.') {
        if (label == 0 || label > 63) return false;
        if (domain[i - 1] == '-' || domain[i - label] == '-') return false;
        label = 0;
      } else if (IsAlnum(domain[i]) || domain[i] == '-') {
        ++label;
      } else {
        return false;
      }
    }
    return true;
  }

  // The CommonMark "process emphasis" procedure over stack_[bottom..].
  void ProcessEmphasis(std::size_t bottom) {
    std::map<std::tuple<char, bool, std::size_t>, std::size_t> openers_bottom;
    std::size_t current = bottom;
    while (current < stack_.size()) {
      Delimiter& closer = stack_[current];
      if (closer.ch == '[' || !closer.can_close) {
        ++current;
        continue;
      }
      const auto key =
          std::make_tuple(closer.ch, closer.can_open, closer.original % 3);
      std::size_t floor_seq = 0;
      if (auto it = openers_bottom.find(key); it != openers_bottom.end()) {
        floor_seq = it->second;
      }
      std::optional<std::size_t> found;
      for (std::size_t i = current; i > bottom; --i) {
        const Delimiter& o = stack_[i - 1];
        if (o.seq < floor_seq) break;
        if (o.ch != closer.ch || !o.can_open) continue;
        if ((o.can_close || closer.can_open) &&
            (o.original + closer.original) % 3 == 0 &&
            !(o.original % 3 == 0 && closer.original % 3 == 0)) {
          continue;
        }
        found = i - 1;
        break;
      }
      if (!found) {
        openers_bottom[key] = closer.seq;
        if (!closer.can_open) {
          stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(current));
        } else {
          ++current;
        }
        continue;
      }
      Delimiter& opener = stack_[*found];
      const std::size_t use = (closer.count >= 2 && opener.count >= 2) ? 2 : 1;
      opener.count -= use;
      closer.count -= use;
      opener.node->text.resize(opener.count);
      closer.node->text.resize(closer.count);
      Inline emph;
      emph.kind = use == 2 ? Inline::Kind::kStrong : Inline::Kind::kEmph;
      emph.children.splice(emph.children.end(), nodes_, std::next(opener.node),
                           closer.node);
      nodes_.insert(closer.node, std::move(emph));
      stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(*found) + 1,
                   stack_.begin() + static_cast<std::ptrdiff_t>(current));
      current = *found + 1;
      if (stack_[*found].count == 0) {
        nodes_.erase(stack_[*found].node);
        stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(*found));
        --current;
      }
      if (stack_[current].count == 0) {
        nodes_.erase(stack_[current].node);
        stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(current));
      }
    }
    stack_.resize(std::min(stack_.size(), bottom));
  }

  std::string_view s_;
  const LinkReferences& refs_;
  std::size_t pos_ = 0;
  std::string text_;
  InlineList nodes_;
  std::vector<Delimiter> stack_;
  std::size_t next_seq_ = 0;
};

void PlainText(const InlineList& nodes, std::string& out) {
  for (const Inline& n : nodes) {
    switch (n.kind) {
      case Inline::Kind::kText:
      case Inline::Kind::kCode:
        out += n.text;
        break;
      case Inline::Kind::kSoftBreak:
      case Inline::Kind::kHardBreak:
        out += '\n';
        break;
      case Inline::Kind::kHtml:
        break;
      default:
        PlainText(n.children, out);
    }
  }
}

void RenderInlines(const InlineList& nodes, std::string& out) {
  for (const Inline& n : nodes) {
    switch (n.kind) {
      case Inline::Kind::kText:
        out += EscapeHtml(n.text);
        break;
      case Inline::Kind::kSoftBreak:
        out += '\n';
        break;
      case Inline::Kind::kHardBreak:
        out += "<br />\n";
        break;
      case Inline::Kind::kCode:
        out += "<code>" + EscapeHtml(n.text) + "</code>";
        break;
      case Inline::Kind::kHtml:
        out += n.text;
        break;
      case Inline::Kind::kEmph:
        out += "<em>";
        RenderInlines(n.children, out);
        out += "</em>";
        break;
      case Inline::Kind::kStrong:
        out += "<strong>";
        RenderInlines(n.children, out);
        out += "</strong>";
        break;
      case Inline::Kind::kLink:
        out += "<a href=\"" + EscapeHref(n.target.destination) + "\"";
        if (!n.target.title.empty()) {
          out += " title=\"" + EscapeHtml(n.target.title) + "\"";
        }
        out += ">";
        RenderInlines(n.children, out);
        out += "</a>";
        break;
      case Inline::Kind::kImage: {
        std::string alt;
        PlainText(n.children, alt);
        out += "<img src=\"" + EscapeHref(n.target.destination) + "\" alt=\"" +
               EscapeHtml(alt) + "\"";
        if (!n.target.title.empty()) {
          out += " title=\"" + EscapeHtml(n.target.title) + "\"";
        }
        out += " />";
        break;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Block structure.

struct BlockNode {
  BlockKind kind = BlockKind::kParagraph;
  std::string text;
  std::string info;
  int level = 0;
  std::vector<BlockNode> children;
  std::vector<std::vector<BlockNode>> items;
  bool ordered = false;
  long start = 1;
  bool tight = true;
  bool definitions_only = false;
  std::size_t first_line = 0;
  std::size_t end_line = 0;
};

std::size_t Indent(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && line[i] == ' ') ++i;
  return i;
}

bool IsBlankLine(std::string_view line) { return IsBlankText(line); }

std::string_view TrimLeft(std::string_view s) {
  while (!s.empty() && IsSpaceOrTab(s.front())) s.remove_prefix(1);
  return s;
}

std::string ExpandLeadingTabs(std::string_view line) {
  std::string out;
  std::size_t i = 0;
  for (; i < line.size() && IsSpaceOrTab(line[i]); ++i) {
    if (line[i] == ' ') {
      out.push_back(' ');
    } else {
      out.append(4 - out.size() % 4, ' ');
    }
  }
  out.append(line.substr(i));
  return out;
}

bool AtxHeading(std::string_view line, int& level, std::string& content) {
  const std::size_t ind = Indent(line);
  if (ind > 3) return false;
  std::size_t i = ind;
  while (i < line.size() && line[i] == '#') ++i;
  const std::size_t hashes = i - ind;
  if (hashes == 0 || hashes > 6) return false;
  if (i < line.size() && !IsSpaceOrTab(line[i])) return false;
  std::string_view rest = TrimSpace(line.substr(i));
  std::size_t end = rest.size();
  while (end > 0 && rest[end - 1] == '#') --end;
  if (end == 0) {
    rest = {};
  } else if (end < rest.size() && IsSpaceOrTab(rest[end - 1])) {
    rest = TrimSpace(rest.substr(0, end));
  }
  level = static_cast<int>(hashes);
  content = std::string(rest);
  return true;
}

bool ThematicBreak(std::string_view line) {
  const std::size_t ind = Indent(line);
  if (ind > 3 || ind >= line.size()) return false;
  const char c = line[ind];
  if (c != '-' && c != '*' && c != '_') return false;
  std::size_t count = 0;
  for (char x : line.substr(ind)) {
    if (x == c) {
      ++count;
    } else if (!IsSpaceOrTab(x)) {
      return false;
    }
  }
  return count >= 3;
}

int SetextUnderline(std::string_view line) {
  const std::size_t ind = Indent(line);
  if (ind > 3 || ind >= line.size()) return 0;
  const char c = line[ind];
  if (c != '=' && c != '-') return 0;
  std::size_t i = ind;
  while (i < line.size() && line[i] == c) ++i;
  if (!IsBlankText(line.substr(i))) return 0;
  return c == '=' ? 1 : 2;
}

struct Fence {
  char ch = 0;
  std::size_t length = 0;
  std::size_t indent = 0;
  std::string info;
};

std::optional<Fence> FenceOpen(std::string_view line) {
  const std::size_t ind = Indent(line);
  if (ind > 3 || ind >= line.size()) return std::nullopt;
  const char c = line[ind];
  if (c != '`' && c != '~') return std::nullopt;
  std::size_t i = ind;
  while (i < line.size() && line[i] == c) ++i;
  if (i - ind < 3) return std::nullopt;
  const std::string_view info = TrimSpace(line.substr(i));
  if (c == '`' && info.find('`') != std::string_view::npos) return std::nullopt;
  return Fence{c, i - ind, ind, Unescape(info)};
}

bool FenceClose(std::string_view line, const Fence& fence) {
  const std::size_t ind = Indent(line);
  if (ind > 3) return false;
  std::size_t i = ind;
  while (i < line.size() && line[i] == fence.ch) ++i;
  return i - ind >= fence.length && IsBlankText(line.substr(i));
}

struct ListMarker {
  bool ordered = false;
  char ch = 0;
  long start = 1;
  std::size_t content_column = 0;
  bool empty = false;
};

std::optional<ListMarker> ParseListMarker(std::string_view line) {
  const std::size_t ind = Indent(line);
  if (ind > 3 || ind >= line.size()) return std::nullopt;
  ListMarker m;
  std::size_t i = ind;
  if (line[i] == '-' || line[i] == '+' || line[i] == '*') {
    m.ch = line[i];
    ++i;
  } else {
    while (i < line.size() && IsDigit(line[i]) && i - ind < 10) ++i;
    const std::size_t digits = i - ind;
    if (digits == 0 || digits > 9 || i >= line.size() ||
        (line[i] != '.' && line[i] != ')')) {
      return std::nullopt;
    }
    m.ordered = true;
    m.ch = line[i];
    m.start = std::stol(std::string(line.substr(ind, digits)));
    ++i;
  }
  if (i < line.size() && line[i] != ' ') return std::nullopt;
  if (IsBlankText(line.substr(i))) {
    m.empty = true;
    m.content_column = i + 1;
    return m;
  }
  std::size_t spaces = 0;
  while (i + spaces < line.size() && line[i + spaces] == ' ') ++spaces;
  m.content_column = spaces >= 5 ? i + 1 : i + spaces;
  return m;
}

bool BlockQuoteStart(std::string_view line) {
  const std::size_t ind = Indent(line);
  return ind <= 3 && ind < line.size() && line[ind] == '>';
}

std::string StripBlockQuote(std::string_view line) {
  const std::size_t ind = Indent(line);
  std::size_t i = ind + 1;
  if (i < line.size() && line[i] == ' ') ++i;
  return std::string(line.substr(std::min(i, line.size())));
}

bool StartsWithTag(std::string_view rest, std::string_view name) {
  if (rest.size() < name.size() + 1) return false;
  if (AsciiLower(rest.substr(1, name.size())) != name) return false;
  const std::size_t i = name.size() + 1;
  return i == rest.size() || IsSpaceOrTab(rest[i]) || rest[i] == '>';
}

// Returns the HTML block start condition (1-7) or 0.
int HtmlBlockStart(std::string_view line) {
  const std::size_t ind = Indent(line);
  if (ind > 3 || ind >= line.size() || line[ind] != '<') return 0;
  const std::string_view rest = line.substr(ind);
  for (std::string_view tag : {"script", "pre", "style", "textarea"}) {
    if (StartsWithTag(rest, tag)) return 1;
  }
  if (rest.substr(0, 4) == "<!--") return 2;
  if (rest.substr(0, 2) == "<?") return 3;
  if (rest.substr(0, 9) == "<![CDATA[") return 5;
  if (rest.size() > 2 && rest[1] == '!' && IsAlpha(rest[2])) return 4;
  static const std::array<std::string_view, 62> kBlockTags = {
      "address",  "article",    "aside",   "base",     "basefont", "blockquote",
      "body",     "caption",    "center",  "col",      "colgroup", "dd",
      "details",  "dialog",     "dir",     "div",      "dl",       "dt",
      "fieldset", "figcaption", "figure",  "footer",   "form",     "frame",
      "frameset", "h1",         "h2",      "h3",       "h4",       "h5",
      "h6",       "head",       "header",  "hr",       "html",     "iframe",
      "legend",   "li",         "link",    "main",     "menu",     "menuitem",
      "nav",      "noframes",   "ol",      "optgroup", "option",   "p",
      "param",    "search",     "section", "summary",  "table",    "tbody",
      "td",       "tfoot",      "th",      "thead",    "title",    "tr",
      "track",    "ul"};
  std::size_t i = rest.size() > 1 && rest[1] == '/' ? 2 : 1;
  std::size_t j = i;
  while (j < rest.size() && IsAlnum(rest[j])) ++j;
  const std::string name = AsciiLower(rest.substr(i, j - i));
  if (!name.empty() && std::find(kBlockTags.begin(), kBlockTags.end(), name) !=
                           kBlockTags.end()) {
    if (j == rest.size() || IsSpaceOrTab(rest[j]) || rest[j] == '>' ||
        rest.substr(j, 2) == "/>") {
      return 6;
    }
  }
  std::size_t n = MatchOpenTag(rest, 0);
  if (n == 0) n = MatchCloseTag(rest, 0);
  if (n > 0 && IsBlankText(rest.substr(n))) return 7;
  return 0;
}

bool HtmlBlockEnds(std::string_view line, int type) {
  const std::string lower = AsciiLower(line);
  switch (type) {
    case 1:
      return lower.find("</script>") != std::string::npos ||
             lower.find("</pre>") != std::string::npos ||
             lower.find("</style>") != std::string::npos ||
             lower.find("</textarea>") != std::string::npos;
    case 2:
      return line.find("-->") != std::string_view::npos;
    case 3:
      return line.find("?>") != std::string_view::npos;
    case 4:
      return line.find('>') != std::string_view::npos;
    case 5:
      return line.find("]]>") != std::string_view::npos;
    default:
      return false;
  }
}

bool CanInterruptParagraph(std::string_view line) {
  int level = 0;
  std::string content;
  if (AtxHeading(line, level, content) || FenceOpen(line) ||
      BlockQuoteStart(line) || ThematicBreak(line)) {
    return true;
  }
  const int html = HtmlBlockStart(line);
  if (html >= 1 && html <= 6) return true;
  if (auto m = ParseListMarker(line)) {
    return !m->empty && (!m->ordered || m->start == 1);
  }
  return false;
}

// Lazy paragraph continuation inside a container. `last_lazy` says the
// previous line was itself a lazy continuation.
bool IsLazyContinuation(const std::vector<std::string>& inner,
                        std::string_view line, bool last_lazy) {
  if (IsBlankLine(line) || inner.empty() || IsBlankLine(inner.back())) {
    return false;
  }
  if (!last_lazy && (Indent(inner.back()) >= 4 || FenceOpen(inner.back()))) {
    return false;
  }
  return !CanInterruptParagraph(line) && !ParseListMarker(line);
}

// Indented so the nested parse can only read it as paragraph text.
std::string LazyLine(std::string_view line) {
  return "    " + std::string(TrimLeft(line));
}

class BlockParser {
 public:
  explicit BlockParser(Document& doc) : doc_(doc) {}

  std::vector<BlockNode> ParseLines(const std::vector<std::string>& lines) {
    std::vector<BlockNode> out;
    std::size_t i = 0;
    const std::size_t n = lines.size();
    while (i < n) {
      const std::string& line = lines[i];
      if (IsBlankLine(line)) {
        ++i;
        continue;
      }
      BlockNode node;
      node.first_line = i;
      int level = 0;
      std::string content;
      if (Indent(line) >= 4) {
        std::size_t j = i;
        std::size_t last = i;
        while (j < n && (IsBlankLine(lines[j]) || Indent(lines[j]) >= 4)) {
          if (!IsBlankLine(lines[j])) last = j;
          ++j;
        }
        node.kind = BlockKind::kCodeBlock;
        for (std::size_t k = i; k <= last; ++k) {
          const std::string& l = lines[k];
          node.text += l.substr(std::min<std::size_t>(4, Indent(l))) + "\n";
        }
        i = last + 1;
      } else if (auto fence = FenceOpen(line)) {
        node.kind = BlockKind::kCodeBlock;
        node.info = fence->info;
        std::size_t j = i + 1;
        for (; j < n && !FenceClose(lines[j], *fence); ++j) {
          const std::string& l = lines[j];
          node.text += l.substr(std::min(fence->indent, Indent(l))) + "\n";
        }
        i = std::min(j + 1, n);
      } else if (AtxHeading(line, level, content)) {
        node.kind = BlockKind::kHeading;
        node.level = level;
        node.text = content;
        ++i;
      } else if (ThematicBreak(line)) {
        node.kind = BlockKind::kThematicBreak;
        ++i;
      } else if (BlockQuoteStart(line)) {
        std::vector<std::string> inner;
        std::size_t j = i;
        bool lazy = false;
        while (j < n) {
          if (BlockQuoteStart(lines[j])) {
            inner.push_back(StripBlockQuote(lines[j]));
            lazy = false;
          } else if (IsLazyContinuation(inner, lines[j], lazy)) {
            inner.push_back(LazyLine(lines[j]));
            lazy = true;
          } else {
            break;
          }
          ++j;
        }
        node.kind = BlockKind::kBlockQuote;
        node.children = ParseLines(inner);
        i = j;
      } else if (int html = HtmlBlockStart(line)) {
        node.kind = BlockKind::kHtmlBlock;
        std::size_t j = i;
        if (html <= 5) {
          while (j < n) {
            node.text += lines[j] + "\n";
            if (HtmlBlockEnds(lines[j++], html)) break;
          }
        } else {
          while (j < n && !IsBlankLine(lines[j]))
            node.text += lines[j++] + "\n";
        }
        i = j;
      } else if (ParseListMarker(line)) {
        i = ParseList(lines, i, node);
      } else {
        const std::size_t end = ParseParagraph(lines, i, node);
        if (end == i) {
          // Only link reference definitions: kept for looseness, not output.
          node.definitions_only = true;
          i = node.end_line;
        } else {
          i = end;
        }
      }
      node.end_line = i;
      while (node.end_line > node.first_line &&
             IsBlankLine(lines[node.end_line - 1])) {
        --node.end_line;
      }
      out.push_back(std::move(node));
    }
    return out;
  }

 private:
  // Returns the line after the paragraph, or `i` when the lines held only
  // definitions (node.end_line then marks where they stopped).
  std::size_t ParseParagraph(const std::vector<std::string>& lines,
                             std::size_t i, BlockNode& node) {
    const std::size_t n = lines.size();
    std::vector<std::string> para;
    std::size_t j = i;
    int setext = 0;
    while (j < n && !IsBlankLine(lines[j])) {
      if (j > i) {
        if (int level = SetextUnderline(lines[j])) {
          setext = level;
          break;
        }
        if (CanInterruptParagraph(lines[j])) break;
      }
      para.push_back(std::string(TrimLeft(lines[j])));
      ++j;
    }
    std::string text;
    for (const std::string& p : para) {
      if (!text.empty()) text += '\n';
      text += p;
    }
    std::string rest = ExtractDefinitions(text);
    while (!rest.empty() && IsLineSpace(rest.back())) rest.pop_back();
    if (rest.empty()) {
      node.end_line = j;
      return i;
    }
    node.text = std::move(rest);
    if (setext != 0) {
      node.kind = BlockKind::kHeading;
      node.level = setext;
      return j + 1;
    }
    node.kind = BlockKind::kParagraph;
    return j;
  }

  std::size_t ParseList(const std::vector<std::string>& lines, std::size_t i,
                        BlockNode& node) {
    const std::size_t n = lines.size();
    const ListMarker first = *ParseListMarker(lines[i]);
    node.kind = BlockKind::kList;
    node.ordered = first.ordered;
    node.start = first.start;
    std::size_t j = i;
    bool blank_before_next = false;
    while (j < n) {
      if (ThematicBreak(lines[j])) break;
      const auto marker = ParseListMarker(lines[j]);
      if (!marker || marker->ordered != first.ordered ||
          marker->ch != first.ch) {
        break;
      }
      if (blank_before_next) node.tight = false;
      const std::size_t width = marker->content_column;
      std::vector<std::string> item;
      item.push_back(marker->empty ? std::string() : lines[j].substr(width));
      ++j;
      bool lazy = false;
      while (j < n) {
        const std::string& l = lines[j];
        if (IsBlankLine(l)) {
          if (marker->empty && item.size() == 1) break;
          item.push_back("");
          lazy = false;
        } else if (Indent(l) >= width) {
          item.push_back(l.substr(width));
          lazy = false;
        } else if (IsLazyContinuation(item, l, lazy)) {
          item.push_back(LazyLine(l));
          lazy = true;
        } else {
          break;
        }
        ++j;
      }
      std::size_t trailing = 0;
      while (item.size() > 1 && IsBlankLine(item.back())) {
        item.pop_back();
        ++trailing;
      }
      // A blank line directly after an empty item's marker line.
      if (trailing == 0 && j < n && IsBlankLine(lines[j])) trailing = 1;
      blank_before_next = trailing > 0;
      std::vector<BlockNode> children = ParseLines(item);
      for (std::size_t k = 1; k < children.size(); ++k) {
        if (children[k].first_line > children[k - 1].end_line) {
          node.tight = false;
        }
      }
      node.items.push_back(std::move(children));
      while (j < n && IsBlankLine(lines[j])) ++j;
    }
    // Trailing blank lines belong to whatever follows.
    while (j > i && IsBlankLine(lines[j - 1])) --j;
    return j;
  }

  // Consumes leading link reference definitions; returns the remainder.
  std::string ExtractDefinitions(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == '[') {
      std::string label;
      auto label_end = ParseLabel(text, pos, label);
      if (!label_end || IsBlankText(label) || *label_end >= text.size() ||
          text[*label_end] != ':') {
        break;
      }
      const std::size_t dest_start = SkipSpaces(text, *label_end + 1);
      std::string dest;
      auto dest_end = ParseDestination(text, dest_start, dest);
      if (!dest_end && text.compare(dest_start, 2, "<>") == 0) {
        dest_end = dest_start + 2;
      }
      if (!dest_end) break;
      auto line_end_after = [&](std::size_t k) -> std::optional<std::size_t> {
        while (k < text.size() && IsSpaceOrTab(text[k])) ++k;
        if (k == text.size()) return k;
        if (text[k] == '\n') return k + 1;
        return std::nullopt;
      };
      std::string title;
      std::optional<std::size_t> end;
      const std::size_t title_start = SkipSpaces(text, *dest_end);
      if (title_start > *dest_end) {
        if (auto title_end = ParseTitle(text, title_start, title)) {
          end = line_end_after(*title_end);
        }
      }
      if (!end) {
        title.clear();
        end = line_end_after(*dest_end);
      }
      if (!end) break;
      const std::string key = NormalizeLabel(label);
      if (!doc_.references.count(key)) {
        doc_.references[key] = {dest, title};
      }
      std::string source = text.substr(pos, *end - pos);
      while (!source.empty() && source.back() == '\n') source.pop_back();
      doc_.definition_sources.push_back(std::move(source));
      pos = *end;
    }
    return text.substr(pos);
  }

  Document& doc_;
};

std::string RenderBlocks(const std::vector<BlockNode>& nodes,
                         const LinkReferences& refs, bool tight);

std::string RenderBlock(const BlockNode& node, const LinkReferences& refs) {
  switch (node.kind) {
    case BlockKind::kParagraph:
      return "<p>" + RenderInline(node.text, refs) + "</p>\n";
    case BlockKind::kHeading: {
      const std::string tag = "h" + std::to_string(node.level);
      return "<" + tag + ">" + RenderInline(node.text, refs) + "</" + tag +
             ">\n";
    }
    case BlockKind::kThematicBreak:
      return "<hr />\n";
    case BlockKind::kCodeBlock: {
      std::string out = "<pre><code";
      const std::string_view info = node.info;
      if (!info.empty()) {
        const std::size_t space = info.find_first_of(" \t");
        out += " class=\"language-" + EscapeHtml(info.substr(0, space)) + "\"";
      }
      return out + ">" + EscapeHtml(node.text) + "</code></pre>\n";
    }
    case BlockKind::kHtmlBlock:
      return node.text;
    case BlockKind::kBlockQuote: {
      std::string inner = RenderBlocks(node.children, refs, false);
      if (inner.empty()) inner = "\n";
      return "<blockquote>" + inner + "</blockquote>\n";
    }
    case BlockKind::kList: {
      std::string out;
      if (!node.ordered) {
        out = "<ul>\n";
      } else if (node.start == 1) {
        out = "<ol>\n";
      } else {
        out = "<ol start=\"" + std::to_string(node.start) + "\">\n";
      }
      for (const std::vector<BlockNode>& item : node.items) {
        out += "<li>" + RenderBlocks(item, refs, node.tight) + "</li>\n";
      }
      return out + (node.ordered ? "</ol>\n" : "</ul>\n");
    }
  }
  return {};
}

std::string RenderBlocks(const std::vector<BlockNode>& nodes,
                         const LinkReferences& refs, bool tight) {
  std::string out;
  for (const BlockNode& node : nodes) {
    if (node.definitions_only) continue;
    if (tight && node.kind == BlockKind::kParagraph) {
      out += RenderInline(node.text, refs);
      continue;
    }
    if (out.empty() || out.back() != '\n') out += '\n';
    out += RenderBlock(node, refs);
  }
  return out;
}

}  // namespace

Document Parse(std::string_view markdown) {
  std::string normalized;
  normalized.reserve(markdown.size());
  for (std::size_t i = 0; i < markdown.size(); ++i) {
    const char c = markdown[i];
    if (c == '\r') {
      normalized.push_back('\n');
      if (i + 1 < markdown.size() && markdown[i + 1] == '\n') ++i;
    } else if (c == '\0') {
      normalized += "\xEF\xBF\xBD";
    } else {
      normalized.push_back(c);
    }
  }
  std::vector<std::string> raw_lines;
  std::size_t start = 0;
  while (start < normalized.size()) {
    std::size_t end = normalized.find('\n', start);
    if (end == std::string::npos) end = normalized.size();
    raw_lines.push_back(normalized.substr(start, end - start));
    start = end + 1;
  }
  std::vector<std::string> lines;
  lines.reserve(raw_lines.size());
  for (const std::string& l : raw_lines) lines.push_back(ExpandLeadingTabs(l));

  Document doc;
  BlockParser parser(doc);
  const std::vector<BlockNode> nodes = parser.ParseLines(lines);
  for (const BlockNode& node : nodes) {
    if (node.definitions_only) continue;
    TopBlock block;
    block.kind = node.kind;
    for (std::size_t k = node.first_line; k < node.end_line; ++k) {
      if (k > node.first_line) block.source += '\n';
      block.source += raw_lines[k];
    }
    block.html = RenderBlock(node, doc.references);
    if (node.kind == BlockKind::kParagraph ||
        node.kind == BlockKind::kHeading) {
      block.inline_text = node.text;
    }
    block.heading_level = node.level;
    doc.blocks.push_back(std::move(block));
  }
  return doc;
}

std::string RenderInline(std::string_view text, const LinkReferences& refs) {
  std::string out;
  RenderInlines(InlineParser(text, refs).Parse(), out);
  return out;
}

std::string EscapeHtml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string EscapeHref(std::string_view url) {
  static constexpr std::string_view kSafe = "-._~:/?#@!$&'()*+,;=";
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string encoded;
  for (std::size_t i = 0; i < url.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(url[i]);
    const bool escape_ok =
        c == '%' && i + 2 < url.size() &&
        std::isxdigit(static_cast<unsigned char>(url[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(url[i + 2]));
    if (IsAlnum(static_cast<char>(c)) ||
        kSafe.find(static_cast<char>(c)) != std::string_view::npos ||
        escape_ok) {
      encoded.push_back(static_cast<char>(c));
    } else {
      encoded.push_back('%');
      encoded.push_back(kHex[c >> 4]);
      encoded.push_back(kHex[c & 0xF]);
    }
  }
  return EscapeHtml(encoded);
}

std::optional<LinkTarget> SoleLink(std::string_view inline_text,
                                   const LinkReferences& refs) {
  const InlineList nodes = InlineParser(TrimSpace(inline_text), refs).Parse();
  const Inline* link = nullptr;
  for (const Inline& node : nodes) {
    if (node.kind == Inline::Kind::kText && IsBlankText(node.text)) continue;
    if (node.kind != Inline::Kind::kLink || link != nullptr) {
      return std::nullopt;
    }
    link = &node;
  }
  if (link == nullptr) return std::nullopt;
  return link->target;
}

}  // namespace textarium::markdown
