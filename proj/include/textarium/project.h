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

#ifndef TEXTARIUM_PROJECT_H_
#define TEXTARIUM_PROJECT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textarium/analysis.h"
#include "textarium/argument.h"
#include "textarium/text_model.h"

namespace textarium {

inline constexpr std::string_view kConfigFileName = "textarium.conf";
inline constexpr std::string_view kSourcesDirName = "sources";

// Plain key=value lines; '#' starts a comment line.
struct ProjectConfig {
  std::string title;
  // Source text paths relative to the project root, in import order.
  std::vector<std::string> sources;
  std::string essay = "essay.md";
  std::string out = "site";
  double similarity_threshold = kDefaultSimilarityThreshold;
  double suggestion_threshold = kDefaultSuggestionThreshold;
  int port = 8000;
  // Optional interpretation-view bundle directory.
  std::string assets;

  bool operator==(const ProjectConfig&) const = default;
};

// Throws ConfigError naming the offending line.
ProjectConfig ParseConfig(std::string_view text);
std::string FormatConfig(const ProjectConfig& config);

class Project {
 public:
  // Throws IoError when `root` holds no config file, ConfigError when the
  // config is malformed.
  static Project Open(const std::filesystem::path& root);

  const std::filesystem::path& root() const { return root_; }
  const ProjectConfig& config() const { return config_; }
  ProjectConfig& mutable_config() { return config_; }
  std::filesystem::path out_dir() const { return root_ / config_.out; }

  // Writes the config back to disk.
  void Save() const;

  // Source documents in config order.
  std::vector<Document> LoadDocuments() const;
  // Empty when the essay file is absent.
  ArgumentDocument LoadEssay() const;

 private:
  Project(std::filesystem::path root, ProjectConfig config)
      : root_(std::move(root)), config_(std::move(config)) {}

  std::filesystem::path root_;
  ProjectConfig config_;
};

// Creates textarium.conf, an empty essay.md and sources/. Throws
// ScaffoldError when `dir` exists and is not an empty directory.
void InitProject(const std::filesystem::path& dir);

// Copies `file` into sources/, records it in the config and writes
// <out>/txt/doc.json for the primary document. Throws IoError or
// EncodingError; the project is unchanged on failure.
Document ImportText(Project& project, const std::filesystem::path& file);

struct BuildResult {
  std::vector<Diagnostic> diagnostics;
  // Embeds whose state does not resolve against its document.
  std::vector<std::string> warnings;
  std::optional<ArgumentManifest> manifest;
};

// Validates embeds; with no diagnostics, compiles the site into out_dir().
BuildResult BuildProject(const Project& project);

// "<n> embeds, <m> warnings"
std::string BuildSummary(const BuildResult& result);

}  // namespace textarium

#endif  // TEXTARIUM_PROJECT_H_
