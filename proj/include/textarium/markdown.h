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

#ifndef TEXTARIUM_MARKDOWN_H_
#define TEXTARIUM_MARKDOWN_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace textarium::markdown {

struct LinkTarget {
  std::string destination;
  std::string title;
};

// Keys are normalized labels (case-folded, whitespace collapsed).
using LinkReferences = std::map<std::string, LinkTarget>;

enum class BlockKind {
  kParagraph,
  kHeading,
  kThematicBreak,
  kCodeBlock,
  kHtmlBlock,
  kBlockQuote,
  kList,
};

// One top-level block of a document.
struct TopBlock {
  BlockKind kind = BlockKind::kParagraph;
  // The source lines the block was parsed from, joined with '\n'.
  std::string source;
  // Rendered HTML, newline-terminated.
  std::string html;
  // Raw inline text for paragraphs and headings.
  std::string inline_text;
  int heading_level = 0;
};

struct Document {
  std::vector<TopBlock> blocks;
  LinkReferences references;
  // Source lines of link reference definitions, in order.
  std::vector<std::string> definition_sources;
};

// CommonMark block structure (ATX/setext headings, thematic breaks,
// indented and fenced code, HTML blocks, block quotes, lists, paragraphs,
// link reference definitions) with inline rendering (escapes, entities,
// code spans, emphasis, links, images, autolinks, raw HTML, hard breaks).
// Tables, footnotes and other extensions are not recognized.
Document Parse(std::string_view markdown);

std::string RenderInline(std::string_view text, const LinkReferences& refs);

std::string EscapeHtml(std::string_view text);

// Percent-encodes what an href cannot carry and HTML-escapes the result.
std::string EscapeHref(std::string_view url);

// If `inline_text` is nothing but a single link (surrounding whitespace
// allowed), returns its target. Images and links nested in emphasis do not
// count.
std::optional<LinkTarget> SoleLink(std::string_view inline_text,
                                   const LinkReferences& refs);

}  // namespace textarium::markdown

#endif  // TEXTARIUM_MARKDOWN_H_
