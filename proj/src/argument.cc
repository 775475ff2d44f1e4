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

#include "textarium/argument.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>
#include <utility>

#include "textarium/errors.h"
#include "textarium/fragment_codec.h"
#include "textarium/markdown.h"

namespace textarium {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kDefaultTitle = "Untitled";

// Plain text of rendered inline HTML: tags dropped, basic escapes undone.
std::string PlainText(std::string_view html) {
  std::string out;
  for (std::size_t i = 0; i < html.size(); ++i) {
    if (html[i] == '<') {
      const std::size_t close = html.find('>', i);
      if (close == std::string_view::npos) break;
      i = close;
      continue;
    }
    if (html[i] == '&') {
      static constexpr std::pair<std::string_view, char> kEscapes[] = {
          {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}};
      bool matched = false;
      for (const auto& [entity, c] : kEscapes) {
        if (html.substr(i, entity.size()) == entity) {
          out.push_back(c);
          i += entity.size() - 1;
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    out.push_back(html[i]);
  }
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFile(const fs::path& path, std::string_view content) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) {
    throw IoError("cannot create " + path.parent_path().string() + ": " +
                  ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

// Regular files under `dir`, as sorted relative generic paths.
std::vector<std::string> ListFiles(const fs::path& dir) {
  std::vector<std::string> files;
  std::error_code ec;
  for (fs::recursive_directory_iterator it(dir, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file()) {
      files.push_back(fs::relative(it->path(), dir).generic_string());
    }
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  return files;
}

std::uint64_t Mix(std::uint64_t hash, std::string_view bytes) {
  hash = Fnv1a64(std::to_string(bytes.size()) + ":", hash);
  return Fnv1a64(bytes, hash);
}

constexpr std::string_view kPageStyle = R"(body {
  margin: 0;
  font-family: Georgia, "Times New Roman", serif;
  line-height: 1.6;
  color: #1d1d1f;
  background: #fdfcf9;
}
main.argument {
  max-width: 46rem;
  margin: 0 auto;
  padding: 3rem 1.5rem 6rem;
}
figure.embed {
  margin: 2.5rem -4rem;
  border: 1px solid #d8d4cc;
  border-radius: 6px;
  background: #fff;
}
figure.embed .frame {
  min-height: 28rem;
}
figure.embed iframe {
  display: block;
  width: 100%;
  height: 28rem;
  border: 0;
}
figure.embed figcaption {
  padding: 0.4rem 0.8rem;
  font-size: 0.85rem;
  border-top: 1px solid #ece8e0;
}
)";

constexpr std::string_view kPageRuntime = R"(<script>
(function () {
  var figures = document.querySelectorAll("figure.embed[data-embed-url]");
  function mount(figure) {
    var holder = figure.querySelector(".frame");
    if (!holder || holder.querySelector("iframe")) return;
    var frame = document.createElement("iframe");
    frame.src = figure.getAttribute("data-embed-url");
    frame.title = "Interpretation " + figure.getAttribute("data-ordinal");
    holder.appendChild(frame);
  }
  if (!("IntersectionObserver" in window)) {
    figures.forEach(mount);
    return;
  }
  var observer = new IntersectionObserver(function (entries) {
    entries.forEach(function (entry) {
      if (entry.isIntersecting) {
        mount(entry.target);
        observer.unobserve(entry.target);
      }
    });
  });
  figures.forEach(function (figure) { observer.observe(figure); });
})();
</script>
)";

constexpr std::string_view kViewerPage = R"(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>Interpretation</title>
<style>
body { margin: 0; font-family: Georgia, serif; line-height: 1.7; }
#view { display: flex; gap: 2rem; padding: 1.5rem; }
#text { flex: 3; white-space: pre-wrap; }
#panes { flex: 2; font-family: system-ui, sans-serif; font-size: 0.9rem; }
#panes section { border-left: 4px solid; padding: 0.2rem 0.6rem; margin-bottom: 0.6rem; }
mark { background: none; border-bottom: 3px solid; }
.focus { outline: 2px dashed #555; }
</style>
</head>
<body>
<main id="view"><article id="text"></article><aside id="panes"></aside></main>
<script>
(function () {
  var palette = ["#648FFF", "#785EF0", "#DC267F", "#FE6100", "#FFB000"];
  function parseHash(hash) {
    var state = { d: null, a: [], g: [], o: null, f: null };
    hash.replace(/^#/, "").split("&").forEach(function (pair) {
      var eq = pair.indexOf("=");
      if (eq < 0) return;
      var key = pair.slice(0, eq), value = pair.slice(eq + 1);
      if (key === "d") state.d = value;
      if (key === "a") value.split(",").forEach(function (item) {
        var at = item.lastIndexOf("@"), range = item.slice(at + 1).split("-");
        state.a.push({ text: decodeURIComponent(item.slice(0, at)),
                       start: +range[0], end: +(range[1] || range[0]) });
      });
      if (key === "g") value.split(",").forEach(function (item) {
        var colon = item.lastIndexOf(":");
        state.g.push({ name: decodeURIComponent(item.slice(0, colon)),
                       members: item.slice(colon + 1).split("+").map(Number) });
      });
      if (key === "o") state.o = value.split("+").map(Number);
      if (key === "f") state.f = +value;
    });
    return state;
  }
  function fetchOrNull(url, kind) {
    return fetch(url).then(function (r) { return r.ok ? r[kind]() : null; });
  }
  function render(doc, text, state) {
    var bytes = new TextEncoder().encode(text), decoder = new TextDecoder();
    var owner = {};
    state.a.forEach(function (a, i) {
      for (var t = a.start; t <= a.end; t++) owner[t] = i;
    });
    var article = document.getElementById("text");
    article.textContent = "";
    var cursor = 0;
    doc.tokens.forEach(function (token) {
      article.append(decoder.decode(bytes.slice(cursor, token.byteStart)));
      var node = document.createElement(token.index in owner ? "mark" : "span");
      node.textContent = token.surface;
      if (token.index in owner) node.style.borderColor = palette[owner[token.index] % 5];
      if (token.index === state.f) node.className = "focus";
      article.append(node);
      cursor = token.byteEnd;
    });
    article.append(decoder.decode(bytes.slice(cursor)));
    var panes = document.getElementById("panes");
    panes.textContent = "";
    var order = state.o || state.a.map(function (_, i) { return i; });
    order.forEach(function (i) {
      var a = state.a[i];
      if (!a) return;
      var section = document.createElement("section");
      section.style.borderColor = palette[i % 5];
      section.textContent = a.text;
      state.g.forEach(function (g) {
        if (g.members.indexOf(i) >= 0) section.textContent += " · " + g.name;
      });
      panes.append(section);
    });
  }
  function load() {
    var state = parseHash(location.hash);
    var base = state.d ? "docs/" + state.d : null;
    var docs = base ? Promise.all([fetchOrNull(base + ".json", "json"),
                                   fetchOrNull(base + ".txt", "text")])
                    : Promise.resolve([null, null]);
    docs.then(function (found) {
      if (found[0] && found[1] !== null) return found;
      return Promise.all([fetchOrNull("doc.json", "json"),
                          fetchOrNull("text.txt", "text")]);
    }).then(function (pair) {
      if (pair[0]) render(pair[0], pair[1] || "", state);
    });
  }
  window.addEventListener("hashchange", load);
  load();
})();
</script>
</body>
</html>
)";

std::string RenderPage(const ArgumentDocument& doc, const std::string& title) {
  using markdown::EscapeHref;
  using markdown::EscapeHtml;
  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n";
  html += "<meta charset=\"utf-8\">\n";
  html +=
      "<meta name=\"viewport\" content=\"width=device-width, "
      "initial-scale=1\">\n";
  html += "<title>" + EscapeHtml(title) + "</title>\n";
  html += "<style>\n" + std::string(kPageStyle) + "</style>\n";
  html += "</head>\n<body>\n<main class=\"argument\">\n";
  for (const Block& block : doc.blocks) {
    const std::string ordinal = std::to_string(block.ordinal);
    if (block.kind == BlockKind::kEmbed) {
      html += "<figure class=\"embed\" data-ordinal=\"" + ordinal +
              "\" data-embed-url=\"" + EscapeHtml(block.embed_url) + "\">\n";
      html += "<div class=\"frame\"></div>\n";
      html += "<figcaption><a href=\"" + EscapeHref(block.embed_url) +
              "\">Open interpretation " + ordinal + "</a></figcaption>\n";
      html += "</figure>\n";
    } else {
      html += "<section class=\"prose\" data-ordinal=\"" + ordinal + "\"";
      if (block.degraded_url) html += " data-warning=\"broken-embed\"";
      html += ">\n" + block.html + "</section>\n";
    }
  }
  html += "</main>\n";
  html += kPageRuntime;
  html += "</body>\n</html>\n";
  return html;
}

}  // namespace

std::string_view BlockKindName(BlockKind kind) {
  return kind == BlockKind::kEmbed ? "embed" : "prose";
}

std::string_view DiagnosticClassName(DiagnosticClass c) {
  return c == DiagnosticClass::kSyntax ? "syntax" : "unknown-document";
}

std::size_t ArgumentDocument::embed_count() const {
  return static_cast<std::size_t>(std::count_if(
      blocks.begin(), blocks.end(),
      [](const Block& b) { return b.kind == BlockKind::kEmbed; }));
}

std::size_t ArgumentDocument::warning_count() const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(),
                    [](const Block& b) { return b.degraded_url.has_value(); }));
}

std::size_t ArgumentManifest::embed_count() const {
  return static_cast<std::size_t>(std::count_if(
      blocks.begin(), blocks.end(),
      [](const ManifestBlock& b) { return b.kind == BlockKind::kEmbed; }));
}

bool TargetsInterpretationView(std::string_view url) {
  std::string_view path = url.substr(0, url.find('#'));
  path = path.substr(0, path.find('?'));
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  return path == "txt/" || path == "txt/index.html" || ends_with("/txt/") ||
         ends_with("/txt/index.html");
}

std::optional<std::string> UrlFragment(std::string_view url) {
  const std::size_t hash = url.find('#');
  if (hash == std::string_view::npos) return std::nullopt;
  return std::string(url.substr(hash + 1));
}

ArgumentDocument ParseArgument(std::string_view markdown) {
  const markdown::Document parsed = markdown::Parse(markdown);
  ArgumentDocument doc;
  doc.source = std::string(markdown);
  doc.definitions = parsed.definition_sources;
  for (const markdown::TopBlock& top : parsed.blocks) {
    Block block;
    block.ordinal = doc.blocks.size() + 1;
    block.source = top.source;
    if (doc.title.empty() && top.kind == markdown::BlockKind::kHeading) {
      doc.title =
          PlainText(markdown::RenderInline(top.inline_text, parsed.references));
    }
    std::optional<markdown::LinkTarget> link;
    if (top.kind == markdown::BlockKind::kParagraph) {
      link = markdown::SoleLink(top.inline_text, parsed.references);
    }
    const std::optional<std::string> fragment =
        link ? UrlFragment(link->destination) : std::nullopt;
    if (link && TargetsInterpretationView(link->destination) && fragment &&
        !fragment->empty()) {
      try {
        ParseFragment("#" + *fragment);
        block.kind = BlockKind::kEmbed;
        block.embed_url = link->destination;
      } catch (const ParseError& e) {
        block.degraded_url = link->destination;
        block.warning = e.what();
      }
    }
    if (block.kind == BlockKind::kProse) block.html = top.html;
    doc.blocks.push_back(std::move(block));
  }
  return doc;
}

std::string ToMarkdown(const ArgumentDocument& doc) {
  std::string out;
  for (const Block& block : doc.blocks) {
    if (!out.empty()) out += "\n";
    out += block.source + "\n";
  }
  if (!doc.definitions.empty()) {
    if (!out.empty()) out += "\n";
    for (const std::string& definition : doc.definitions) {
      out += definition + "\n";
    }
  }
  return out;
}

std::string FormatDiagnostic(const Diagnostic& d) {
  return "block " + std::to_string(d.ordinal) + ": " +
         std::string(DiagnosticClassName(d.diagnostic_class)) + ": " + d.url +
         ": " + d.message;
}

std::vector<Diagnostic> ValidateEmbeds(
    const ArgumentDocument& doc, const std::set<std::string>& known_docs) {
  std::vector<Diagnostic> out;
  for (const Block& block : doc.blocks) {
    const std::string* url = nullptr;
    if (block.kind == BlockKind::kEmbed) {
      url = &block.embed_url;
    } else if (block.degraded_url) {
      url = &*block.degraded_url;
    } else {
      continue;
    }
    ParsedFragment parsed;
    try {
      parsed = ParseFragment("#" + UrlFragment(*url).value_or(""));
    } catch (const ParseError& e) {
      out.push_back({block.ordinal, *url, DiagnosticClass::kSyntax, e.what()});
      continue;
    }
    const std::string fingerprint = parsed.doc_fingerprint.value_or("");
    if (!known_docs.count(fingerprint)) {
      out.push_back({block.ordinal, *url, DiagnosticClass::kUnknownDocument,
                     "no imported document has fingerprint " + fingerprint});
    }
  }
  return out;
}

OrderedJson ManifestToJson(const ArgumentManifest& manifest) {
  OrderedJson json;
  json["title"] = manifest.title;
  json["blocks"] = OrderedJson::array();
  for (const ManifestBlock& block : manifest.blocks) {
    OrderedJson entry;
    entry["ordinal"] = block.ordinal;
    entry["kind"] = std::string(BlockKindName(block.kind));
    if (block.embed_url) entry["embedUrl"] = *block.embed_url;
    json["blocks"].push_back(std::move(entry));
  }
  json["buildFingerprint"] = manifest.build_fingerprint;
  return json;
}

ArgumentManifest CompileSite(const ArgumentDocument& doc,
                             const SiteInputs& inputs,
                             const fs::path& out_dir) {
  std::set<std::string> known;
  for (const Document& d : inputs.documents) known.insert(d.fingerprint());
  std::vector<std::string> broken;
  for (const Diagnostic& d : ValidateEmbeds(doc, known)) {
    if (d.diagnostic_class == DiagnosticClass::kUnknownDocument) {
      broken.push_back(d.url);
    }
  }
  if (!broken.empty()) {
    std::string message = "embeds reference unknown documents:";
    for (const std::string& url : broken) message += " " + url;
    throw BrokenEmbedError(message);
  }

  ArgumentManifest manifest;
  manifest.title = !inputs.title.empty() ? inputs.title
                   : !doc.title.empty()  ? doc.title
                                         : std::string(kDefaultTitle);
  for (const Block& block : doc.blocks) {
    ManifestBlock entry{block.ordinal, block.kind, std::nullopt};
    if (block.kind == BlockKind::kEmbed) entry.embed_url = block.embed_url;
    manifest.blocks.push_back(std::move(entry));
  }

  std::vector<std::pair<std::string, std::string>> assets;
  if (inputs.assets_dir) {
    for (const std::string& rel : ListFiles(*inputs.assets_dir)) {
      assets.emplace_back(rel, ReadFile(*inputs.assets_dir / rel));
    }
  }

  std::uint64_t hash = Fnv1a64("textarium-build");
  hash = Mix(hash, doc.source);
  hash = Mix(hash, manifest.title);
  for (const Document& d : inputs.documents) {
    hash = Mix(hash, d.title());
    hash = Mix(hash, d.raw());
  }
  for (const auto& [rel, content] : assets) {
    hash = Mix(hash, rel);
    hash = Mix(hash, content);
  }
  manifest.build_fingerprint = ToHex16(hash);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  }
  fs::remove_all(out_dir / "txt", ec);
  if (ec) {
    throw IoError("cannot clear " + (out_dir / "txt").string() + ": " +
                  ec.message());
  }

  const Document primary =
      inputs.documents.empty() ? Document("") : inputs.documents.front();
  WriteFile(out_dir / "index.html", RenderPage(doc, manifest.title));
  WriteFile(out_dir / "txt" / "index.html", kViewerPage);
  for (const auto& [rel, content] : assets) {
    WriteFile(out_dir / "txt" / rel, content);
  }
  WriteFile(out_dir / "txt" / "text.txt", primary.raw());
  WriteFile(out_dir / "txt" / "doc.json", DumpJson(DocumentToJson(primary)));
  for (const Document& d : inputs.documents) {
    const fs::path base = out_dir / "txt" / "docs" / d.fingerprint();
    WriteFile(base.string() + ".txt", d.raw());
    WriteFile(base.string() + ".json", DumpJson(DocumentToJson(d)));
  }
  WriteFile(out_dir / "manifest.json", DumpJson(ManifestToJson(manifest)));
  return manifest;
}

}  // namespace textarium
