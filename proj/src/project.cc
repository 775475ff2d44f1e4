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

#include "textarium/project.h"

#include <charconv>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <system_error>

#include "textarium/errors.h"
#include "textarium/fragment_codec.h"
#include "textarium/state_json.h"

namespace textarium {
namespace {

namespace fs = std::filesystem;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFile(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

double ParseThreshold(std::string_view value, std::size_t line) {
  double out = 0;
  const auto [end, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size() || out < 0 ||
      out > 1) {
    throw ConfigError("line " + std::to_string(line) +
                      ": threshold must be a number in [0, 1]");
  }
  return out;
}

std::string FormatThreshold(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

}  // namespace

ProjectConfig ParseConfig(std::string_view text) {
  ProjectConfig config;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": duplicate key '" + key + "'");
    }
    if (key == "title") {
      config.title = value;
    } else if (key == "sources") {
      std::size_t from = 0;
      while (from <= value.size() && !value.empty()) {
        std::size_t comma = value.find(',', from);
        if (comma == std::string_view::npos) comma = value.size();
        const std::string_view item = Trim(value.substr(from, comma - from));
        if (!item.empty()) config.sources.emplace_back(item);
        from = comma + 1;
      }
    } else if (key == "essay") {
      config.essay = value;
    } else if (key == "out") {
      config.out = value;
    } else if (key == "similarity_threshold") {
      config.similarity_threshold = ParseThreshold(value, line_no);
    } else if (key == "suggestion_threshold") {
      config.suggestion_threshold = ParseThreshold(value, line_no);
    } else if (key == "port") {
      int port = 0;
      const auto [p, ec] =
          std::from_chars(value.data(), value.data() + value.size(), port);
      if (ec != std::errc() || p != value.data() + value.size() || port < 0 ||
          port > 65535) {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": port must be an integer in [0, 65535]");
      }
      config.port = port;
    } else if (key == "assets") {
      config.assets = value;
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        key + "'");
    }
  }
  if (config.essay.empty() || config.out.empty()) {
    throw ConfigError("essay and out must not be empty");
  }
  return config;
}

std::string FormatConfig(const ProjectConfig& config) {
  std::string sources;
  for (const std::string& s : config.sources) {
    if (!sources.empty()) sources += ",";
    sources += s;
  }
  std::string out = "# Textarium project\n";
  out += "title=" + config.title + "\n";
  out += "sources=" + sources + "\n";
  out += "essay=" + config.essay + "\n";
  out += "out=" + config.out + "\n";
  out +=
      "similarity_threshold=" + FormatThreshold(config.similarity_threshold) +
      "\n";
  out +=
      "suggestion_threshold=" + FormatThreshold(config.suggestion_threshold) +
      "\n";
  out += "port=" + std::to_string(config.port) + "\n";
  if (!config.assets.empty()) out += "assets=" + config.assets + "\n";
  return out;
}

Project Project::Open(const fs::path& root) {
  const fs::path config_path = root / kConfigFileName;
  std::error_code ec;
  if (!fs::is_regular_file(config_path, ec)) {
    throw IoError("no " + std::string(kConfigFileName) + " in " +
                  root.string());
  }
  return Project(root, ParseConfig(ReadFile(config_path)));
}

void Project::Save() const {
  WriteFile(root_ / kConfigFileName, FormatConfig(config_));
}

std::vector<Document> Project::LoadDocuments() const {
  std::vector<Document> docs;
  for (const std::string& source : config_.sources) {
    docs.push_back(Document::FromFile(root_ / source));
  }
  return docs;
}

ArgumentDocument Project::LoadEssay() const {
  const fs::path path = root_ / config_.essay;
  std::error_code ec;
  if (!fs::exists(path, ec)) return ParseArgument("");
  return ParseArgument(ReadFile(path));
}

void InitProject(const fs::path& dir) {
  std::error_code ec;
  if (fs::exists(dir, ec)) {
    if (!fs::is_directory(dir, ec)) {
      throw ScaffoldError(dir.string() + " exists and is not a directory");
    }
    if (!fs::is_empty(dir, ec)) {
      throw ScaffoldError(dir.string() + " is not empty");
    }
  }
  fs::create_directories(dir / kSourcesDirName, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  ProjectConfig config;
  config.title = dir.filename().empty() ? dir.parent_path().filename().string()
                                        : dir.filename().string();
  WriteFile(dir / "essay.md", "");
  WriteFile(dir / kConfigFileName, FormatConfig(config));
}

Document ImportText(Project& project, const fs::path& file) {
  std::error_code ec;
  if (!fs::is_regular_file(file, ec)) {
    throw IoError("cannot read " + file.string() + ": not a regular file");
  }
  const std::string bytes = ReadFile(file);
  Document doc(bytes, file.stem().string());

  const std::string rel =
      (fs::path(kSourcesDirName) / file.filename()).generic_string();
  const fs::path dest = project.root() / rel;
  fs::create_directories(dest.parent_path(), ec);
  if (ec) throw IoError("cannot create " + dest.parent_path().string());
  if (!fs::exists(dest, ec) || !fs::equivalent(dest, file, ec)) {
    WriteFile(dest, bytes);
  }
  ProjectConfig& config = project.mutable_config();
  if (std::find(config.sources.begin(), config.sources.end(), rel) ==
      config.sources.end()) {
    config.sources.push_back(rel);
  }
  project.Save();

  const std::vector<Document> docs = project.LoadDocuments();
  const fs::path txt = project.out_dir() / "txt";
  fs::create_directories(txt, ec);
  if (ec) throw IoError("cannot create " + txt.string());
  WriteFile(txt / "doc.json", DumpJson(DocumentToJson(docs.front())));
  return doc;
}

BuildResult BuildProject(const Project& project) {
  BuildResult result;
  const std::vector<Document> docs = project.LoadDocuments();
  const ArgumentDocument essay = project.LoadEssay();
  std::set<std::string> known;
  for (const Document& d : docs) known.insert(d.fingerprint());
  result.diagnostics = ValidateEmbeds(essay, known);
  if (!result.diagnostics.empty()) return result;

  for (const Block& block : essay.blocks) {
    if (block.kind != BlockKind::kEmbed) continue;
    const std::string fragment = "#" + UrlFragment(block.embed_url).value();
    const std::string fingerprint = *ParseFragment(fragment).doc_fingerprint;
    for (const Document& d : docs) {
      if (d.fingerprint() != fingerprint) continue;
      try {
        Decode(fragment, d);
      } catch (const Error& e) {
        result.warnings.push_back("block " + std::to_string(block.ordinal) +
                                  ": " + e.what());
      }
      break;
    }
  }

  SiteInputs inputs;
  inputs.title = project.config().title;
  inputs.documents = docs;
  if (!project.config().assets.empty()) {
    inputs.assets_dir = project.root() / project.config().assets;
  }
  result.manifest = CompileSite(essay, inputs, project.out_dir());
  return result;
}

std::string BuildSummary(const BuildResult& result) {
  const std::size_t embeds =
      result.manifest ? result.manifest->embed_count() : 0;
  return std::to_string(embeds) + " embeds, " +
         std::to_string(result.warnings.size()) + " warnings";
}

}  // namespace textarium
