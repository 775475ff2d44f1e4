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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "textarium/errors.h"
#include "textarium/unicode.h"

namespace textarium {
namespace {

constexpr int kMaxRepeat = 1000;
constexpr std::size_t kMaxProgram = 1 << 18;

struct ClassItem {
  enum Kind { kRange, kDigit, kNotDigit, kWord, kNotWord, kSpace, kNotSpace };
  Kind kind = kRange;
  char32_t lo = 0;
  char32_t hi = 0;
};

bool IsAsciiDigit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool IsAsciiWord(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
         IsAsciiDigit(c) || c == U'_';
}

bool ItemMatches(const ClassItem& item, char32_t c) {
  switch (item.kind) {
    case ClassItem::kRange:
      return c >= item.lo && c <= item.hi;
    case ClassItem::kDigit:
      return IsAsciiDigit(c);
    case ClassItem::kNotDigit:
      return !IsAsciiDigit(c);
    case ClassItem::kWord:
      return IsAsciiWord(c);
    case ClassItem::kNotWord:
      return !IsAsciiWord(c);
    case ClassItem::kSpace:
      return unicode::IsWhiteSpace(c) || c == U'\uFEFF';
    case ClassItem::kNotSpace:
      return !(unicode::IsWhiteSpace(c) || c == U'\uFEFF');
  }
  return false;
}

struct CharSet {
  std::vector<ClassItem> items;
  bool negated = false;

  bool Matches(char32_t c) const {
    const bool hit =
        std::any_of(items.begin(), items.end(),
                    [c](const ClassItem& i) { return ItemMatches(i, c); });
    return hit != negated;
  }
};

CharSet Literal(char32_t c) {
  return CharSet{{ClassItem{ClassItem::kRange, c, c}}, false};
}

CharSet AnyButNewline() {
  CharSet set;
  set.negated = true;
  for (char32_t c : {U'\n', U'\r', U'\u2028', U'\u2029'}) {
    set.items.push_back({ClassItem::kRange, c, c});
  }
  return set;
}

struct Node {
  enum Kind { kEmpty, kSet, kConcat, kAlt, kRepeat, kBegin, kEnd };
  Kind kind = kEmpty;
  CharSet set;
  std::vector<Node> children;
  int min = 0;
  int max = 0;  // -1 = unbounded
};

class Parser {
 public:
  explicit Parser(std::u32string_view src) : src_(src) {}

  Node Parse() {
    Node node = ParseAlternation();
    if (pos_ < src_.size()) {
      // Only an unmatched ')' stops the top-level alternation early.
      throw PatternError("unmatched ')'", pos_);
    }
    return node;
  }

 private:
  bool AtEnd() const { return pos_ >= src_.size(); }
  char32_t Peek() const { return src_[pos_]; }

  Node ParseAlternation() {
    Node first = ParseConcat();
    if (AtEnd() || Peek() != U'|') return first;
    Node alt;
    alt.kind = Node::kAlt;
    alt.children.push_back(std::move(first));
    while (!AtEnd() && Peek() == U'|') {
      ++pos_;
      alt.children.push_back(ParseConcat());
    }
    return alt;
  }

  Node ParseConcat() {
    Node concat;
    concat.kind = Node::kConcat;
    while (!AtEnd() && Peek() != U'|' && Peek() != U')') {
      concat.children.push_back(ParseRepeat());
    }
    if (concat.children.size() == 1) return std::move(concat.children[0]);
    if (concat.children.empty()) return Node{};
    return concat;
  }

  Node ParseRepeat() {
    Node atom = ParseAtom();
    if (AtEnd()) return atom;
    int min = 0;
    int max = 0;
    const std::size_t quant_pos = pos_;
    if (!ParseQuantifier(min, max)) return atom;
    if (atom.kind == Node::kBegin || atom.kind == Node::kEnd) {
      throw PatternError("nothing to repeat", quant_pos);
    }
    if (!AtEnd() && Peek() == U'?') ++pos_;  // lazy marker
    if (!AtEnd()) {
      const std::size_t save = pos_;
      int unused_min = 0;
      int unused_max = 0;
      if (ParseQuantifier(unused_min, unused_max)) {
        throw PatternError("nothing to repeat", save);
      }
    }
    Node repeat;
    repeat.kind = Node::kRepeat;
    repeat.min = min;
    repeat.max = max;
    repeat.children.push_back(std::move(atom));
    return repeat;
  }

  // Consumes a quantifier if one starts at pos_.
  bool ParseQuantifier(int& min, int& max) {
    const char32_t c = Peek();
    if (c == U'*') {
      min = 0, max = -1;
    } else if (c == U'+') {
      min = 1, max = -1;
    } else if (c == U'?') {
      min = 0, max = 1;
    } else if (c == U'{') {
      return ParseBraces(min, max);
    } else {
      return false;
    }
    ++pos_;
    return true;
  }

  bool ParseBraces(int& min, int& max) {
    const std::size_t open = pos_;
    std::size_t p = pos_ + 1;
    auto read_int = [&](int& out) {
      const std::size_t begin = p;
      long long value = 0;
      while (p < src_.size() && IsAsciiDigit(src_[p])) {
        value = std::min<long long>(value * 10 + (src_[p] - U'0'), 1LL << 40);
        ++p;
      }
      if (p == begin) return false;
      if (value > kMaxRepeat) {
        throw PatternError(
            "repetition count exceeds " + std::to_string(kMaxRepeat), begin);
      }
      out = static_cast<int>(value);
      return true;
    };
    if (!read_int(min)) throw PatternError("malformed repetition", open);
    if (p < src_.size() && src_[p] == U',') {
      ++p;
      if (p < src_.size() && src_[p] == U'}') {
        max = -1;
      } else if (!read_int(max)) {
        throw PatternError("malformed repetition", open);
      }
    } else {
      max = min;
    }
    if (p >= src_.size() || src_[p] != U'}') {
      throw PatternError("malformed repetition", open);
    }
    if (max != -1 && max < min) {
      throw PatternError("repetition bounds out of order", open);
    }
    pos_ = p + 1;
    return true;
  }

  Node ParseAtom() {
    const std::size_t at = pos_;
    const char32_t c = src_[pos_++];
    Node node;
    switch (c) {
      case U'(':
        return ParseGroup(at);
      case U'[':
        node.kind = Node::kSet;
        node.set = ParseClass(at);
        return node;
      case U'.':
        node.kind = Node::kSet;
        node.set = AnyButNewline();
        return node;
      case U'^':
        node.kind = Node::kBegin;
        return node;
      case U'$':
        node.kind = Node::kEnd;
        return node;
      case U'\\':
        node.kind = Node::kSet;
        node.set = ParseEscape(at, /*in_class=*/false);
        return node;
      case U'*':
      case U'+':
      case U'?':
      case U'{':
        throw PatternError("nothing to repeat", at);
      default:
        node.kind = Node::kSet;
        node.set = Literal(c);
        return node;
    }
  }

  Node ParseGroup(std::size_t open) {
    if (!AtEnd() && Peek() == U'?') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == U':') {
        pos_ += 2;
      } else {
        throw PatternError("lookaround and named groups are not supported",
                           pos_);
      }
    }
    Node inner = ParseAlternation();
    if (AtEnd()) throw PatternError("unterminated group", open);
    ++pos_;  // ')'
    return inner;
  }

  CharSet ParseClass(std::size_t open) {
    CharSet set;
    if (!AtEnd() && Peek() == U'^') {
      set.negated = true;
      ++pos_;
    }
    while (true) {
      if (AtEnd()) throw PatternError("unterminated character class", open);
      if (Peek() == U']') {
        ++pos_;
        return set;
      }
      const std::size_t item_pos = pos_;
      ClassItem lo = ParseClassAtom();
      if (pos_ + 1 < src_.size() && Peek() == U'-' && src_[pos_ + 1] != U']') {
        ++pos_;
        const std::size_t hi_pos = pos_;
        ClassItem hi = ParseClassAtom();
        if (lo.kind != ClassItem::kRange || hi.kind != ClassItem::kRange ||
            lo.lo != lo.hi || hi.lo != hi.hi) {
          throw PatternError("invalid class range", hi_pos);
        }
        if (lo.lo > hi.lo) {
          throw PatternError("class range out of order", item_pos);
        }
        set.items.push_back({ClassItem::kRange, lo.lo, hi.lo});
      } else {
        set.items.push_back(lo);
      }
    }
  }

  ClassItem ParseClassAtom() {
    const std::size_t at = pos_;
    const char32_t c = src_[pos_++];
    if (c != U'\\') return {ClassItem::kRange, c, c};
    CharSet escaped = ParseEscape(at, /*in_class=*/true);
    return escaped.items.front();
  }

  // pos_ sits just past the backslash.
  CharSet ParseEscape(std::size_t backslash, bool in_class) {
    if (AtEnd()) throw PatternError("dangling escape", backslash);
    const char32_t c = src_[pos_++];
    auto single = [](ClassItem::Kind kind) {
      return CharSet{{ClassItem{kind, 0, 0}}, false};
    };
    switch (c) {
      case U'd':
        return single(ClassItem::kDigit);
      case U'D':
        return single(ClassItem::kNotDigit);
      case U'w':
        return single(ClassItem::kWord);
      case U'W':
        return single(ClassItem::kNotWord);
      case U's':
        return single(ClassItem::kSpace);
      case U'S':
        return single(ClassItem::kNotSpace);
      case U'n':
        return Literal(U'\n');
      case U'r':
        return Literal(U'\r');
      case U't':
        return Literal(U'\t');
      case U'f':
        return Literal(U'\f');
      case U'v':
        return Literal(U'\v');
      case U'b':
        if (in_class) return Literal(U'\b');
        throw PatternError("word boundaries are not supported", backslash);
      case U'B':
        throw PatternError("word boundaries are not supported", backslash);
      case U'x':
        return Literal(ReadHex(2, backslash));
      case U'u':
        return Literal(ReadHex(4, backslash));
      default:
        break;
    }
    if (c >= U'0' && c <= U'9') {
      throw PatternError("backreferences are not supported", backslash);
    }
    if (IsAsciiWord(c)) {
      throw PatternError("unknown escape", backslash);
    }
    return Literal(c);
  }

  char32_t ReadHex(int digits, std::size_t backslash) {
    char32_t value = 0;
    for (int i = 0; i < digits; ++i) {
      if (AtEnd()) throw PatternError("truncated hex escape", backslash);
      const char32_t h = src_[pos_++];
      int v;
      if (h >= U'0' && h <= U'9') {
        v = static_cast<int>(h - U'0');
      } else if (h >= U'a' && h <= U'f') {
        v = static_cast<int>(h - U'a' + 10);
      } else if (h >= U'A' && h <= U'F') {
        v = static_cast<int>(h - U'A' + 10);
      } else {
        throw PatternError("invalid hex escape", backslash);
      }
      value = value * 16 + static_cast<char32_t>(v);
    }
    return value;
  }

  std::u32string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

struct Pattern::Program {
  enum Op { kSet, kSplit, kJump, kBegin, kEnd, kMatch };
  struct Inst {
    Op op = kMatch;
    int x = 0;
    int y = 0;
    int set = -1;
  };
  std::vector<Inst> code;
  std::vector<CharSet> sets;

  int Emit(Inst inst) {
    if (code.size() >= kMaxProgram) {
      throw PatternError("pattern expands beyond " +
                             std::to_string(kMaxProgram) + " instructions",
                         0);
    }
    code.push_back(inst);
    return static_cast<int>(code.size()) - 1;
  }

  void Compile(const Node& node) {
    switch (node.kind) {
      case Node::kEmpty:
        break;
      case Node::kSet:
        sets.push_back(node.set);
        Emit({kSet, 0, 0, static_cast<int>(sets.size()) - 1});
        break;
      case Node::kBegin:
        Emit({kBegin});
        break;
      case Node::kEnd:
        Emit({kEnd});
        break;
      case Node::kConcat:
        for (const Node& child : node.children) Compile(child);
        break;
      case Node::kAlt: {
        std::vector<int> jumps;
        for (std::size_t i = 0; i + 1 < node.children.size(); ++i) {
          const int split = Emit({kSplit});
          code[split].x = split + 1;
          Compile(node.children[i]);
          jumps.push_back(Emit({kJump}));
          code[split].y = static_cast<int>(code.size());
        }
        Compile(node.children.back());
        for (int j : jumps) code[j].x = static_cast<int>(code.size());
        break;
      }
      case Node::kRepeat: {
        const Node& body = node.children.front();
        for (int i = 0; i < node.min; ++i) Compile(body);
        if (node.max == -1) {
          const int split = Emit({kSplit});
          code[split].x = split + 1;
          Compile(body);
          Emit({kJump, split});
          code[split].y = static_cast<int>(code.size());
        } else {
          std::vector<int> splits;
          for (int i = node.min; i < node.max; ++i) {
            const int split = Emit({kSplit});
            code[split].x = split + 1;
            splits.push_back(split);
            Compile(body);
          }
          for (int s : splits) code[s].y = static_cast<int>(code.size());
        }
        break;
      }
    }
  }
};

namespace {

using Program = Pattern::Program;

class ThreadList {
 public:
  explicit ThreadList(std::size_t n) : dense_(n), sparse_(n) {}

  bool Contains(int pc) const {
    const std::size_t i = sparse_[pc];
    return i < size_ && dense_[i] == pc;
  }
  void Add(int pc) {
    sparse_[pc] = size_;
    dense_[size_++] = pc;
  }
  void Clear() { size_ = 0; }
  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return dense_[i]; }

 private:
  std::vector<int> dense_;
  std::vector<std::size_t> sparse_;
  std::size_t size_ = 0;
};

void AddThread(const Program& prog, ThreadList& list, int pc, std::size_t pos,
               std::size_t length, std::vector<int>& stack) {
  stack.clear();
  stack.push_back(pc);
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (list.Contains(cur)) continue;
    list.Add(cur);
    const Program::Inst& inst = prog.code[cur];
    switch (inst.op) {
      case Program::kJump:
        stack.push_back(inst.x);
        break;
      case Program::kSplit:
        stack.push_back(inst.y);
        stack.push_back(inst.x);
        break;
      case Program::kBegin:
        if (pos == 0) stack.push_back(cur + 1);
        break;
      case Program::kEnd:
        if (pos == length) stack.push_back(cur + 1);
        break;
      default:
        break;
    }
  }
}

}  // namespace

Pattern::Pattern(std::string_view source)
    : source_(source), program_(std::make_unique<Program>()) {
  if (std::size_t bad = unicode::FindInvalidUtf8(source);
      bad != std::string_view::npos) {
    throw PatternError("pattern is not valid UTF-8",
                       unicode::Length(source.substr(0, bad)));
  }
  const std::u32string decoded = unicode::Decode(source);
  const Node root = Parser(decoded).Parse();
  program_->Compile(root);
  program_->Emit({Program::kMatch});
}

Pattern::~Pattern() = default;
Pattern::Pattern(const Pattern& other)
    : source_(other.source_),
      program_(std::make_unique<Program>(*other.program_)) {}
Pattern& Pattern::operator=(const Pattern& other) {
  if (this != &other) {
    source_ = other.source_;
    program_ = std::make_unique<Program>(*other.program_);
  }
  return *this;
}
Pattern::Pattern(Pattern&&) noexcept = default;
Pattern& Pattern::operator=(Pattern&&) noexcept = default;

bool Pattern::FullMatch(std::string_view subject) const {
  return FullMatch(unicode::Decode(subject));
}

bool Pattern::FullMatch(std::u32string_view subject) const {
  const Program& prog = *program_;
  const std::size_t n = prog.code.size();
  ThreadList current(n);
  ThreadList next(n);
  std::vector<int> stack;
  AddThread(prog, current, 0, 0, subject.size(), stack);
  for (std::size_t pos = 0; pos < subject.size(); ++pos) {
    if (current.size() == 0) return false;
    next.Clear();
    const char32_t c = subject[pos];
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Program::Inst& inst = prog.code[current[i]];
      if (inst.op == Program::kSet && prog.sets[inst.set].Matches(c)) {
        AddThread(prog, next, current[i] + 1, pos + 1, subject.size(), stack);
      }
    }
    std::swap(current, next);
  }
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (prog.code[current[i]].op == Program::kMatch) return true;
  }
  return false;
}

}  // namespace textarium
