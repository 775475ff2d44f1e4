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

#include "textarium/state.h"

#include <algorithm>
#include <numeric>

#include "textarium/errors.h"

namespace textarium {
namespace {

std::string SpanText(TokenSpan span) {
  return std::to_string(span.start) + ".." + std::to_string(span.end);
}

bool IsPermutation(const std::vector<std::size_t>& ids, std::size_t n) {
  if (ids.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t id : ids) {
    if (id >= n || seen[id]) return false;
    seen[id] = true;
  }
  return true;
}

void CheckSpansDisjoint(std::vector<TokenSpan> spans) {
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].start <= spans[i - 1].end) {
      throw ValidationError("overlapping annotation spans " +
                            SpanText(spans[i - 1]) + " and " +
                            SpanText(spans[i]));
    }
  }
}

}  // namespace

std::string_view PaletteColor(std::size_t color_index) {
  if (color_index >= kPalette.size()) {
    throw RangeError(
        "palette index " + std::to_string(color_index) + " out of range 0..4",
        color_index);
  }
  return kPalette[color_index];
}

InterpretationState Canonicalize(InterpretationState state) {
  const std::size_t n = state.annotations.size();
  if (!state.doc_fingerprint.empty() && !IsHex16(state.doc_fingerprint)) {
    throw ValidationError("document fingerprint '" + state.doc_fingerprint +
                          "' is not 16 lowercase hex digits");
  }

  std::vector<std::size_t> given_ids;
  std::vector<TokenSpan> spans;
  for (const Annotation& a : state.annotations) {
    if (a.span.start > a.span.end) {
      throw ValidationError("annotation span " + SpanText(a.span) +
                            " is reversed");
    }
    if (a.surface.empty()) {
      throw ValidationError("annotation at " + SpanText(a.span) +
                            " has an empty surface");
    }
    given_ids.push_back(a.id);
    spans.push_back(a.span);
  }
  if (!IsPermutation(given_ids, n)) {
    throw ValidationError("annotation ids must be a permutation of 0.." +
                          std::to_string(n == 0 ? 0 : n - 1));
  }
  CheckSpansDisjoint(spans);

  std::sort(state.annotations.begin(), state.annotations.end(),
            [](const Annotation& a, const Annotation& b) {
              return a.span.start < b.span.start;
            });
  std::vector<std::size_t> remap(n);
  for (std::size_t i = 0; i < n; ++i) {
    remap[state.annotations[i].id] = i;
    state.annotations[i].id = i;
    state.annotations[i].color_index = i % kPalette.size();
  }

  std::vector<bool> grouped(n, false);
  for (AbstractionGroup& group : state.groups) {
    if (group.name.empty()) throw ValidationError("group name is empty");
    if (group.member_ids.empty()) {
      throw ValidationError("group '" + group.name + "' has no members");
    }
    for (std::size_t& id : group.member_ids) {
      if (id >= n) {
        throw ValidationError("group '" + group.name +
                              "' references unknown annotation " +
                              std::to_string(id));
      }
      id = remap[id];
      if (grouped[id]) {
        throw ValidationError("annotation " + std::to_string(id) +
                              " belongs to more than one group");
      }
      grouped[id] = true;
    }
    std::sort(group.member_ids.begin(), group.member_ids.end());
  }
  std::stable_sort(state.groups.begin(), state.groups.end(),
                   [](const AbstractionGroup& a, const AbstractionGroup& b) {
                     return a.member_ids.front() < b.member_ids.front();
                   });

  if (state.pane_order.empty()) {
    state.pane_order.resize(n);
    std::iota(state.pane_order.begin(), state.pane_order.end(), std::size_t{0});
  } else {
    if (!IsPermutation(state.pane_order, n)) {
      throw ValidationError("pane order is not a permutation of the " +
                            std::to_string(n) + " annotation ids");
    }
    for (std::size_t& id : state.pane_order) id = remap[id];
  }
  return state;
}

void ValidateCanonical(const InterpretationState& state) {
  if (!IsHex16(state.doc_fingerprint)) {
    throw ValidationError("document fingerprint '" + state.doc_fingerprint +
                          "' is not 16 lowercase hex digits");
  }
  const std::size_t n = state.annotations.size();
  std::vector<TokenSpan> spans;
  for (std::size_t i = 0; i < n; ++i) {
    const Annotation& a = state.annotations[i];
    if (a.id != i) {
      throw ValidationError("annotation ids are not canonical: position " +
                            std::to_string(i) + " carries id " +
                            std::to_string(a.id));
    }
    if (a.span.start > a.span.end) {
      throw ValidationError("annotation " + std::to_string(i) + " span " +
                            SpanText(a.span) + " is reversed");
    }
    if (a.surface.empty()) {
      throw ValidationError("annotation " + std::to_string(i) +
                            " has an empty surface");
    }
    if (a.color_index != i % kPalette.size()) {
      throw ValidationError("annotation " + std::to_string(i) +
                            " colour index must be id mod 5");
    }
    if (i > 0 && a.span.start < state.annotations[i - 1].span.start) {
      throw ValidationError("annotations are not sorted by span start");
    }
    spans.push_back(a.span);
  }
  CheckSpansDisjoint(spans);

  std::vector<bool> grouped(n, false);
  for (std::size_t g = 0; g < state.groups.size(); ++g) {
    const AbstractionGroup& group = state.groups[g];
    if (group.name.empty()) throw ValidationError("group name is empty");
    if (group.member_ids.empty()) {
      throw ValidationError("group '" + group.name + "' has no members");
    }
    if (!std::is_sorted(group.member_ids.begin(), group.member_ids.end())) {
      throw ValidationError("group '" + group.name +
                            "' member ids are not ascending");
    }
    for (std::size_t id : group.member_ids) {
      if (id >= n) {
        throw ValidationError("group '" + group.name +
                              "' references unknown annotation " +
                              std::to_string(id));
      }
      if (grouped[id]) {
        throw ValidationError("annotation " + std::to_string(id) +
                              " belongs to more than one group");
      }
      grouped[id] = true;
    }
    if (g > 0 &&
        state.groups[g - 1].member_ids.front() > group.member_ids.front()) {
      throw ValidationError("groups are not sorted by smallest member id");
    }
  }
  if (!IsPermutation(state.pane_order, n)) {
    throw ValidationError("pane order is not a permutation of the " +
                          std::to_string(n) + " annotation ids");
  }
}

InterpretationState MakeState(const Document& doc,
                              const std::vector<TokenSpan>& spans) {
  InterpretationState state;
  state.doc_fingerprint = doc.fingerprint();
  for (std::size_t i = 0; i < spans.size(); ++i) {
    state.annotations.push_back({i, spans[i], doc.Slice(spans[i]), 0});
  }
  return Canonicalize(std::move(state));
}

}  // namespace textarium
