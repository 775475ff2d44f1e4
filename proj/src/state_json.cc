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

#include "textarium/state_json.h"

#include "textarium/errors.h"

namespace textarium {

OrderedJson StateToJson(const InterpretationState& state) {
  OrderedJson json;
  json["docFingerprint"] = state.doc_fingerprint;
  json["annotations"] = OrderedJson::array();
  for (const Annotation& a : state.annotations) {
    OrderedJson entry;
    entry["id"] = a.id;
    entry["start"] = a.span.start;
    entry["end"] = a.span.end;
    entry["surface"] = a.surface;
    entry["colorIndex"] = a.color_index;
    json["annotations"].push_back(std::move(entry));
  }
  json["groups"] = OrderedJson::array();
  for (const AbstractionGroup& g : state.groups) {
    OrderedJson entry;
    entry["name"] = g.name;
    entry["memberIds"] = g.member_ids;
    json["groups"].push_back(std::move(entry));
  }
  json["paneOrder"] = state.pane_order;
  json["focusToken"] = state.focus_token ? OrderedJson(*state.focus_token)
                                         : OrderedJson(nullptr);
  return json;
}

InterpretationState StateFromJson(const OrderedJson& json) {
  try {
    if (!json.is_object()) throw ValidationError("state must be a JSON object");
    InterpretationState state;
    state.doc_fingerprint = json.at("docFingerprint").get<std::string>();
    if (json.contains("annotations")) {
      const auto& list = json.at("annotations");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& entry = list.at(i);
        Annotation a;
        a.id = entry.value("id", i);
        a.span.start = entry.at("start").get<std::size_t>();
        a.span.end = entry.value("end", a.span.start);
        a.surface = entry.at("surface").get<std::string>();
        a.color_index = entry.value("colorIndex", a.id % kPalette.size());
        state.annotations.push_back(std::move(a));
      }
    }
    if (json.contains("groups")) {
      for (const auto& entry : json.at("groups")) {
        state.groups.push_back(
            {entry.at("name").get<std::string>(),
             entry.at("memberIds").get<std::vector<std::size_t>>()});
      }
    }
    if (json.contains("paneOrder")) {
      state.pane_order = json.at("paneOrder").get<std::vector<std::size_t>>();
    }
    if (json.contains("focusToken") && !json.at("focusToken").is_null()) {
      state.focus_token = json.at("focusToken").get<std::size_t>();
    }
    return state;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed state JSON: ") + e.what());
  }
}

InterpretationState StateFromJsonText(std::string_view text) {
  OrderedJson json;
  try {
    json = OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed state JSON: ") + e.what());
  }
  return StateFromJson(json);
}

OrderedJson DocumentToJson(const Document& doc) {
  OrderedJson json;
  json["fingerprint"] = doc.fingerprint();
  json["title"] = doc.title();
  json["tokenCount"] = doc.token_count();
  json["tokens"] = OrderedJson::array();
  for (const Token& t : doc.tokens()) {
    OrderedJson entry;
    entry["index"] = t.index;
    entry["surface"] = t.surface;
    entry["byteStart"] = t.byte_start;
    entry["byteEnd"] = t.byte_end;
    json["tokens"].push_back(std::move(entry));
  }
  return json;
}

std::string DumpJson(const OrderedJson& json) {
  return json.dump(2, ' ', false, nlohmann::json::error_handler_t::strict) +
         "\n";
}

}  // namespace textarium
