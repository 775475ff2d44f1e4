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

#ifndef TEXTARIUM_PORTER_STEMMER_H_
#define TEXTARIUM_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace textarium {

// Porter's suffix-stripping stemmer over a lowercase a-z word. Words of
// one or two letters come back unchanged. Behaviour matches the reference
// implementation that produced the published voc.txt/output.txt pair.
std::string PorterStem(std::string_view lowercase_word);

}  // namespace textarium

#endif  // TEXTARIUM_PORTER_STEMMER_H_
