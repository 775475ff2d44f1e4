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

#ifndef TEXTARIUM_ARGUMENT_H_
#define TEXTARIUM_ARGUMENT_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "textarium/state_json.h"
#include "textarium/text_model.h"

namespace textarium {

enum class BlockKind { kProse, kEmbed };

std::string_view BlockKindName(BlockKind kind);

struct Block {
  BlockKind kind = BlockKind::kProse;
  // 1-based position in the document.
  std::size_t ordinal = 0;
  // Markdown the block was parsed from.
  std::string source;
  // Rendered HTML for prose blocks.
  std::string html;
  // Interpretation-view URL for embed blocks.
  std::string embed_url;
  // Set on prose blocks that were embed candidates with an unparsable
  // fragment.
  std::optional<std::string> degraded_url;
  std::string warning;
};

struct ArgumentDocument {
  std::string source;
  // Text of the first heading, if any.
  std::string title;
  std::vector<Block> blocks;
  // Link reference definitions, kept so the document can be re-rendered.
  std::vector<std::string> definitions;

  std::size_t embed_count() const;
  std::size_t warning_count() const;
};

// True if the path part of `url` is "txt/", "txt/index.html" or ends in
// "/txt/" or "/txt/index.html".
bool TargetsInterpretationView(std::string_view url);

// The text after the first '#', or nullopt without one.
std::optional<std::string> UrlFragment(std::string_view url);

ArgumentDocument ParseArgument(std::string_view markdown);

// Block sources separated by blank lines, then the link definitions.
std::string ToMarkdown(const ArgumentDocument& doc);

enum class DiagnosticClass { kSyntax, kUnknownDocument };

std::string_view DiagnosticClassName(DiagnosticClass c);

struct Diagnostic {
  std::size_t ordinal = 0;
  std::string url;
  DiagnosticClass diagnostic_class = DiagnosticClass::kSyntax;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// "block <ordinal>: <class>: <url>: <message>"
std::string FormatDiagnostic(const Diagnostic& d);

// Checks embeds and degraded embed candidates, in block order.
std::vector<Diagnostic> ValidateEmbeds(const ArgumentDocument& doc,
                                       const std::set<std::string>& known_docs);

struct ManifestBlock {
  std::size_t ordinal = 0;
  BlockKind kind = BlockKind::kProse;
  std::optional<std::string> embed_url;

  bool operator==(const ManifestBlock&) const = default;
};

struct ArgumentManifest {
  std::string title;
  std::vector<ManifestBlock> blocks;
  std::string build_fingerprint;

  std::size_t embed_count() const;
  bool operator==(const ArgumentManifest&) const = default;
};

OrderedJson ManifestToJson(const ArgumentManifest& manifest);

struct SiteInputs {
  // Overrides the document title when non-empty.
  std::string title;
  // The first document is the primary one, published as /txt/text.txt and
  // /txt/doc.json.
  std::vector<Document> documents;
  // Optional interpretation-view bundle copied into /txt/.
  std::optional<std::filesystem::path> assets_dir;
};

// Writes /index.html, /manifest.json, /txt/index.html, /txt/text.txt,
// /txt/doc.json and /txt/docs/<fingerprint>.{json,txt} under `out_dir`.
// Throws BrokenEmbedError for embeds naming no known document and IoError
// when the output cannot be written.
ArgumentManifest CompileSite(const ArgumentDocument& doc,
                             const SiteInputs& inputs,
                             const std::filesystem::path& out_dir);

}  // namespace textarium

#endif  // TEXTARIUM_ARGUMENT_H_
