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

#ifndef TEXTARIUM_FRAGMENT_CODEC_H_
#define TEXTARIUM_FRAGMENT_CODEC_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textarium/state.h"
#include "textarium/text_model.h"

namespace textarium {

// URL fragment grammar:
//
//   fragment := "#" pair ("&" pair)*
//   pair     := "d=" hex16 | "a=" annot ("," annot)* | "g=" group (";" group)*
//             | "o=" int ("+" int)* | "f=" int
//   annot    := text "@" int ["-" int]
//   group    := text ":" int ("+" int)*
//
// Text is percent-encoded only where needed (the separators
// # & = , @ : + ; - % plus characters a URL fragment cannot carry), so the
// annotated words stay readable in the address bar.

// Percent-encodes `text` for use inside an annotation or group name.
std::string EncodeText(std::string_view text);
// Inverse of EncodeText; accepts %xx in either case. Throws ParseError with
// `base` added to the reported position.
std::string DecodeText(std::string_view text, std::size_t base = 0);

// Serializes a canonical state. Throws ValidationError otherwise.
std::string Encode(const InterpretationState& state);

// Syntax-level view of a fragment, before it is checked against a document.
struct ParsedFragment {
  struct Annot {
    std::string text;
    std::size_t start = 0;
    std::optional<std::size_t> end;
  };
  struct Group {
    std::string name;
    std::vector<std::size_t> members;
  };
  std::optional<std::string> doc_fingerprint;
  std::vector<Annot> annotations;
  std::vector<Group> groups;
  std::optional<std::vector<std::size_t>> order;
  std::optional<std::size_t> focus;
  // Keys that were skipped, for forward compatibility.
  std::vector<std::string> unknown_keys;
};

// Checks the grammar only. Keys may appear in any order; unknown keys are
// collected and ignored. A non-empty fragment must carry d=. Throws
// ParseError with the byte position of the fault.
ParsedFragment ParseFragment(std::string_view fragment);

// Parses, resolves against `doc` and canonicalizes. Unknown keys are
// reported through `unknown_keys` when given.
//   DocumentMismatchError  d= names another text
//   StaleStateError        recorded words differ from the document slice
//   RangeError             token index outside the document
//   ParseError / ValidationError otherwise
InterpretationState Decode(std::string_view fragment, const Document& doc,
                           std::vector<std::string>* unknown_keys = nullptr);

}  // namespace textarium

#endif  // TEXTARIUM_FRAGMENT_CODEC_H_
