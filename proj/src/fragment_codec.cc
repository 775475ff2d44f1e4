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

#include "textarium/fragment_codec.h"

#include <algorithm>
#include <string_view>

#include "textarium/errors.h"
#include "textarium/unicode.h"

namespace textarium {
namespace {

constexpr std::string_view kSeparators = "#&=,@:+;-%";
// Not allowed raw in a URL fragment.
constexpr std::string_view kUnsafe = " \"<>\\^`{|}[]";
constexpr std::size_t kMaxDigits = 15;

bool NeedsEscape(unsigned char c) {
  return c < 0x20 || c == 0x7F ||
         kSeparators.find(static_cast<char>(c)) != std::string_view::npos ||
         kUnsafe.find(static_cast<char>(c)) != std::string_view::npos;
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string JoinInts(const std::vector<std::size_t>& ids, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += std::to_string(ids[i]);
  }
  return out;
}

// Cursor over one pair value. Positions are absolute fragment offsets.
class ValueReader {
 public:
  ValueReader(std::string_view value, std::size_t base)
      : value_(value), base_(base) {}

  bool AtEnd() const { return pos_ >= value_.size(); }
  char Peek() const { return value_[pos_]; }
  std::size_t Position() const { return base_ + pos_; }

  void Expect(char c, std::string_view what) {
    if (AtEnd() || Peek() != c) {
      throw ParseError(
          "expected '" + std::string(1, c) + "' " + std::string(what),
          Position());
    }
    ++pos_;
  }

  bool Accept(char c) {
    if (!AtEnd() && Peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t ReadInt() {
    const std::size_t begin = pos_;
    while (!AtEnd() && Peek() >= '0' && Peek() <= '9') ++pos_;
    if (pos_ == begin) throw ParseError("expected an integer", base_ + begin);
    if (pos_ - begin > 1 && value_[begin] == '0') {
      throw ParseError("integer has a leading zero", base_ + begin);
    }
    if (pos_ - begin > kMaxDigits) {
      throw ParseError("integer too large", base_ + begin);
    }
    std::size_t v = 0;
    for (std::size_t i = begin; i < pos_; ++i) v = v * 10 + (value_[i] - '0');
    return v;
  }

  // Encoded text up to (not including) `terminator`.
  std::string ReadText(char terminator, std::string_view what) {
    const std::size_t begin = pos_;
    while (!AtEnd() && Peek() != terminator) {
      const char c = Peek();
      if (c != '%' && kSeparators.find(c) != std::string_view::npos) {
        throw ParseError(
            "unexpected '" + std::string(1, c) + "' in " + std::string(what),
            Position());
      }
      ++pos_;
    }
    if (pos_ == begin) {
      throw ParseError("empty " + std::string(what), base_ + begin);
    }
    return DecodeText(value_.substr(begin, pos_ - begin), base_ + begin);
  }

  std::vector<std::size_t> ReadIntList(char sep) {
    std::vector<std::size_t> out{ReadInt()};
    while (Accept(sep)) out.push_back(ReadInt());
    return out;
  }

 private:
  std::string_view value_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

void ParseAnnotations(ValueReader& in, ParsedFragment& out) {
  do {
    ParsedFragment::Annot annot;
    annot.text = in.ReadText('@', "annotation text");
    in.Expect('@', "after annotation text");
    annot.start = in.ReadInt();
    if (in.Accept('-')) annot.end = in.ReadInt();
    out.annotations.push_back(std::move(annot));
  } while (in.Accept(','));
}

void ParseGroups(ValueReader& in, ParsedFragment& out) {
  do {
    ParsedFragment::Group group;
    group.name = in.ReadText(':', "group name");
    in.Expect(':', "after group name");
    group.members = in.ReadIntList('+');
    out.groups.push_back(std::move(group));
  } while (in.Accept(';'));
}

}  // namespace

std::string EncodeText(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (unsigned char c : text) {
    if (NeedsEscape(c)) {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::string DecodeText(std::string_view text, std::size_t base) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '%') {
      out.push_back(text[i]);
      continue;
    }
    if (i + 2 >= text.size()) {
      throw ParseError("truncated percent escape", base + i);
    }
    const int hi = HexValue(text[i + 1]);
    const int lo = HexValue(text[i + 2]);
    if (hi < 0 || lo < 0) throw ParseError("bad percent escape", base + i);
    out.push_back(static_cast<char>(hi * 16 + lo));
    i += 2;
  }
  if (std::size_t bad = unicode::FindInvalidUtf8(out);
      bad != std::string_view::npos) {
    throw ParseError("decoded text is not valid UTF-8", base);
  }
  return out;
}

std::string Encode(const InterpretationState& state) {
  ValidateCanonical(state);
  std::string out = "#d=" + state.doc_fingerprint;
  if (!state.annotations.empty()) {
    out += "&a=";
    for (std::size_t i = 0; i < state.annotations.size(); ++i) {
      const Annotation& a = state.annotations[i];
      if (i > 0) out.push_back(',');
      out += EncodeText(a.surface);
      out += '@' + std::to_string(a.span.start);
      if (a.span.end != a.span.start) out += '-' + std::to_string(a.span.end);
    }
  }
  if (!state.groups.empty()) {
    out += "&g=";
    for (std::size_t i = 0; i < state.groups.size(); ++i) {
      if (i > 0) out.push_back(';');
      out += EncodeText(state.groups[i].name) + ':' +
             JoinInts(state.groups[i].member_ids, '+');
    }
  }
  const bool identity =
      std::is_sorted(state.pane_order.begin(), state.pane_order.end());
  if (!identity) out += "&o=" + JoinInts(state.pane_order, '+');
  if (state.focus_token) out += "&f=" + std::to_string(*state.focus_token);
  return out;
}

ParsedFragment ParseFragment(std::string_view fragment) {
  ParsedFragment out;
  if (fragment.empty() || fragment == "#") return out;
  if (fragment.front() != '#') {
    throw ParseError("fragment must start with '#'", 0);
  }

  bool seen_a = false;
  bool seen_g = false;
  std::size_t pos = 1;
  while (true) {
    const std::size_t amp = std::min(fragment.find('&', pos), fragment.size());
    const std::string_view pair = fragment.substr(pos, amp - pos);
    const std::size_t eq = pair.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value", pos);
    }
    if (eq == 0) throw ParseError("empty key", pos);
    const std::string_view key = pair.substr(0, eq);
    const std::string_view value = pair.substr(eq + 1);
    const std::size_t value_pos = pos + eq + 1;
    if (value.find('#') != std::string_view::npos) {
      throw ParseError("unexpected '#'", value_pos + value.find('#'));
    }
    auto duplicate = [&] {
      throw ParseError("duplicate key '" + std::string(key) + "'", pos);
    };
    ValueReader in(value, value_pos);
    if (key == "d") {
      if (out.doc_fingerprint) duplicate();
      if (!IsHex16(value)) {
        throw ParseError("d= must be 16 lowercase hex digits", value_pos);
      }
      out.doc_fingerprint = std::string(value);
      in = ValueReader({}, value_pos + value.size());
    } else if (key == "a") {
      if (seen_a) duplicate();
      seen_a = true;
      ParseAnnotations(in, out);
    } else if (key == "g") {
      if (seen_g) duplicate();
      seen_g = true;
      ParseGroups(in, out);
    } else if (key == "o") {
      if (out.order) duplicate();
      out.order = in.ReadIntList('+');
    } else if (key == "f") {
      if (out.focus) duplicate();
      out.focus = in.ReadInt();
    } else {
      out.unknown_keys.emplace_back(key);
      in = ValueReader({}, value_pos + value.size());
    }
    if (!in.AtEnd()) {
      throw ParseError("unexpected '" + std::string(1, in.Peek()) + "'",
                       in.Position());
    }
    if (amp == fragment.size()) break;
    pos = amp + 1;
  }
  if (!out.doc_fingerprint) {
    throw ParseError("missing d= document fingerprint", 1);
  }
  return out;
}

InterpretationState Decode(std::string_view fragment, const Document& doc,
                           std::vector<std::string>* unknown_keys) {
  const ParsedFragment parsed = ParseFragment(fragment);
  if (unknown_keys) *unknown_keys = parsed.unknown_keys;

  InterpretationState state;
  state.doc_fingerprint = doc.fingerprint();
  if (!parsed.doc_fingerprint) return state;
  if (*parsed.doc_fingerprint != doc.fingerprint()) {
    throw DocumentMismatchError("state refers to document " +
                                *parsed.doc_fingerprint + ", not " +
                                doc.fingerprint());
  }

  for (std::size_t i = 0; i < parsed.annotations.size(); ++i) {
    const ParsedFragment::Annot& a = parsed.annotations[i];
    const TokenSpan span{a.start, a.end.value_or(a.start)};
    const std::string actual = doc.Slice(span);  // throws RangeError
    if (actual != a.text) {
      throw StaleStateError("annotation " + std::to_string(i) + " '" + a.text +
                                "' does not match document text '" + actual +
                                "' at " + std::to_string(span.start),
                            i);
    }
    state.annotations.push_back({i, span, actual, 0});
  }
  for (const ParsedFragment::Group& g : parsed.groups) {
    state.groups.push_back({g.name, g.members});
  }
  if (parsed.order) {
    if (parsed.order->size() != parsed.annotations.size()) {
      throw ValidationError(
          "o= lists " + std::to_string(parsed.order->size()) + " ids for " +
          std::to_string(parsed.annotations.size()) + " annotations");
    }
    state.pane_order = *parsed.order;
  }
  if (parsed.focus) {
    if (*parsed.focus >= doc.token_count()) {
      throw RangeError("focus token " + std::to_string(*parsed.focus) +
                           " out of range (" +
                           std::to_string(doc.token_count()) + " tokens)",
                       *parsed.focus);
    }
    state.focus_token = parsed.focus;
  }
  return Canonicalize(std::move(state));
}

}  // namespace textarium
