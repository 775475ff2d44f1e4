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

#ifndef TEXTARIUM_STATE_JSON_H_
#define TEXTARIUM_STATE_JSON_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "textarium/state.h"
#include "textarium/text_model.h"

namespace textarium {

using OrderedJson = nlohmann::ordered_json;

// {"docFingerprint", "annotations": [{"id", "start", "end", "surface",
//  "colorIndex"}], "groups": [{"name", "memberIds"}], "paneOrder",
//  "focusToken"}
OrderedJson StateToJson(const InterpretationState& state);

// Reads the layout above. "id" defaults to the array position, "end" to
// "start", and "colorIndex", "groups", "paneOrder", "focusToken" are
// optional. The result is not canonicalized. Throws ValidationError.
InterpretationState StateFromJson(const OrderedJson& json);
InterpretationState StateFromJsonText(std::string_view text);

// {"fingerprint", "title", "tokenCount", "tokens": [{"index", "surface",
//  "byteStart", "byteEnd"}]}
OrderedJson DocumentToJson(const Document& doc);

// Two-space indentation plus a trailing newline.
std::string DumpJson(const OrderedJson& json);

}  // namespace textarium

#endif  // TEXTARIUM_STATE_JSON_H_
