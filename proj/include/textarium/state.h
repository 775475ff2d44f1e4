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

#ifndef TEXTARIUM_STATE_H_
#define TEXTARIUM_STATE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textarium/text_model.h"

namespace textarium {

// IBM colour-blind-safe palette; annotation colours cycle through it.
inline constexpr std::array<std::string_view, 5> kPalette = {
    "#648FFF", "#785EF0", "#DC267F", "#FE6100", "#FFB000"};

// Throws RangeError for an index outside the palette.
std::string_view PaletteColor(std::size_t color_index);

struct Annotation {
  std::size_t id = 0;
  TokenSpan span;
  std::string surface;
  std::size_t color_index = 0;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct AbstractionGroup {
  std::string name;
  std::vector<std::size_t> member_ids;

  friend bool operator==(const AbstractionGroup&,
                         const AbstractionGroup&) = default;
};

// Everything one interpretation consists of. In canonical form the
// annotations are sorted by span start with id == position, member ids are
// ascending, groups are sorted by their smallest member and pane_order is a
// full permutation of the ids.
struct InterpretationState {
  std::string doc_fingerprint;
  std::vector<Annotation> annotations;
  std::vector<AbstractionGroup> groups;
  std::vector<std::size_t> pane_order;
  std::optional<std::size_t> focus_token;

  friend bool operator==(const InterpretationState&,
                         const InterpretationState&) = default;
};

// Re-sorts annotations by span start, renumbers them and carries the new
// ids through groups and pane order. Annotation ids in the input are the
// references used by groups and pane_order and must be a permutation of
// 0..n-1. An empty pane_order means "document order". Idempotent.
// Throws ValidationError (overlaps, dangling ids, ...).
InterpretationState Canonicalize(InterpretationState state);

// Throws ValidationError naming the first violated invariant when `state`
// is not already canonical and valid.
void ValidateCanonical(const InterpretationState& state);

// Builds an annotation list for the given spans, in canonical order, with
// surfaces taken from the document.
InterpretationState MakeState(const Document& doc,
                              const std::vector<TokenSpan>& spans);

}  // namespace textarium

#endif  // TEXTARIUM_STATE_H_
