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

#include <gtest/gtest.h>

#include <string>
#include <thread>

#include "httplib.h"
#include "test_util.h"
#include "textarium/errors.h"
#include "textarium/server.h"
#include "textarium/state_json.h"

namespace textarium {
namespace {

namespace fs = std::filesystem;
using testing::CopyProject;
using testing::FixturePath;
using testing::ReadBytes;
using testing::TempDir;
using testing::WriteBytes;

TEST(ConfigTest, RoundTrip) {
  ProjectConfig config;
  config.title = "A title";
  config.sources = {"sources/a.txt", "sources/b.txt"};
  config.out = "public";
  config.similarity_threshold = 0.65;
  config.port = 9001;
  config.assets = "web/dist";
  EXPECT_EQ(ParseConfig(FormatConfig(config)), config);
  EXPECT_EQ(ParseConfig(FormatConfig(ProjectConfig{})), ProjectConfig{});
}

TEST(ConfigTest, DefaultsAndComments) {
  const ProjectConfig config = ParseConfig("# note\n\n title = T \r\n");
  EXPECT_EQ(config.title, "T");
  EXPECT_EQ(config.essay, "essay.md");
  EXPECT_EQ(config.out, "site");
  EXPECT_DOUBLE_EQ(config.similarity_threshold, 0.8);
  EXPECT_DOUBLE_EQ(config.suggestion_threshold, 0.75);
  EXPECT_EQ(config.port, 8000);
}

TEST(ConfigTest, Errors) {
  EXPECT_THROW(ParseConfig("title\n"), ConfigError);
  EXPECT_THROW(ParseConfig("colour=red\n"), ConfigError);
  EXPECT_THROW(ParseConfig("title=a\ntitle=b\n"), ConfigError);
  EXPECT_THROW(ParseConfig("port=99999\n"), ConfigError);
  EXPECT_THROW(ParseConfig("similarity_threshold=1.5\n"), ConfigError);
  EXPECT_THROW(ParseConfig("out=\n"), ConfigError);
  try {
    ParseConfig("title=a\n\nbogus=1\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(InitTest, CreatesScaffold) {
  TempDir tmp;
  const fs::path dir = tmp / "notes";
  InitProject(dir);
  EXPECT_TRUE(fs::is_directory(dir / "sources"));
  EXPECT_EQ(ReadBytes(dir / "essay.md"), "");
  const Project project = Project::Open(dir);
  EXPECT_EQ(project.config().title, "notes");
  EXPECT_TRUE(project.config().sources.empty());
}

TEST(InitTest, EmptyDirectoryAccepted) {
  TempDir tmp;
  EXPECT_NO_THROW(InitProject(tmp.path()));
}

TEST(InitTest, RefusesNonEmptyDirectory) {
  TempDir tmp;
  WriteBytes(tmp / "keep.txt", "mine");
  EXPECT_THROW(InitProject(tmp.path()), ScaffoldError);
  EXPECT_EQ(ReadBytes(tmp / "keep.txt"), "mine");
  EXPECT_FALSE(fs::exists(tmp / "textarium.conf"));
}

TEST(InitTest, SecondRunRefused) {
  TempDir tmp;
  InitProject(tmp / "p");
  const std::string conf = ReadBytes(tmp / "p/textarium.conf");
  EXPECT_THROW(InitProject(tmp / "p"), ScaffoldError);
  EXPECT_EQ(ReadBytes(tmp / "p/textarium.conf"), conf);
}

TEST(InitTest, RefusesFile) {
  TempDir tmp;
  WriteBytes(tmp / "f", "x");
  EXPECT_THROW(InitProject(tmp / "f"), ScaffoldError);
}

TEST(OpenTest, MissingConfig) {
  TempDir tmp;
  EXPECT_THROW(Project::Open(tmp.path()), IoError);
}

class ImportTest : public ::testing::Test {
 protected:
  void SetUp() override { InitProject(tmp_ / "p"); }
  Project Open() const { return Project::Open(tmp_ / "p"); }
  TempDir tmp_;
};

TEST_F(ImportTest, RecordsSourceAndWritesDocJson) {
  Project project = Open();
  const Document doc = ImportText(project, FixturePath("cautious_design.txt"));
  EXPECT_EQ(doc.fingerprint(), "b91dbd31061642ba");
  EXPECT_EQ(doc.token_count(), 383u);
  const Project reopened = Open();
  ASSERT_EQ(reopened.config().sources.size(), 1u);
  EXPECT_EQ(reopened.config().sources[0], "sources/cautious_design.txt");
  EXPECT_EQ(ReadBytes(tmp_ / "p/sources/cautious_design.txt"),
            ReadBytes(FixturePath("cautious_design.txt")));
  EXPECT_EQ(ReadBytes(tmp_ / "p/site/txt/doc.json"),
            DumpJson(DocumentToJson(doc)));
}

TEST_F(ImportTest, ReimportIsStable) {
  Project project = Open();
  const Document first =
      ImportText(project, FixturePath("cautious_design.txt"));
  const std::string json = ReadBytes(tmp_ / "p/site/txt/doc.json");
  const Document second =
      ImportText(project, FixturePath("cautious_design.txt"));
  EXPECT_EQ(first.fingerprint(), second.fingerprint());
  EXPECT_EQ(first.tokens(), second.tokens());
  EXPECT_EQ(ReadBytes(tmp_ / "p/site/txt/doc.json"), json);
  EXPECT_EQ(Open().config().sources.size(), 1u);
}

TEST_F(ImportTest, EmptyFile) {
  WriteBytes(tmp_ / "empty.txt", "");
  Project project = Open();
  EXPECT_EQ(ImportText(project, tmp_ / "empty.txt").token_count(), 0u);
}

TEST_F(ImportTest, FailuresLeaveProjectUnchanged) {
  WriteBytes(tmp_ / "binary.bin", std::string("\xff\xfe\x00\x01", 4));
  const std::string conf = ReadBytes(tmp_ / "p/textarium.conf");
  Project project = Open();
  EXPECT_THROW(ImportText(project, tmp_ / "binary.bin"), EncodingError);
  EXPECT_THROW(ImportText(project, tmp_ / "missing.txt"), IoError);
  EXPECT_THROW(ImportText(project, tmp_.path()), IoError);
  EXPECT_EQ(ReadBytes(tmp_ / "p/textarium.conf"), conf);
  EXPECT_TRUE(fs::is_empty(tmp_ / "p/sources"));
}

TEST(BuildProjectTest, FixtureProject) {
  TempDir tmp;
  CopyProject(tmp / "p");
  const BuildResult result = BuildProject(Project::Open(tmp / "p"));
  EXPECT_TRUE(result.diagnostics.empty());
  ASSERT_TRUE(result.manifest.has_value());
  EXPECT_EQ(BuildSummary(result), "3 embeds, 0 warnings");
  EXPECT_TRUE(fs::is_regular_file(tmp / "p/site/manifest.json"));
}

TEST(BuildProjectTest, BrokenEssayStopsBeforeWriting) {
  TempDir tmp;
  CopyProject(tmp / "p");
  fs::copy_file(FixturePath("broken_essay.md"), tmp / "p/essay.md",
                fs::copy_options::overwrite_existing);
  const BuildResult result = BuildProject(Project::Open(tmp / "p"));
  ASSERT_EQ(result.diagnostics.size(), 2u);
  EXPECT_EQ(result.diagnostics[0].diagnostic_class, DiagnosticClass::kSyntax);
  EXPECT_EQ(result.diagnostics[1].diagnostic_class,
            DiagnosticClass::kUnknownDocument);
  EXPECT_FALSE(result.manifest.has_value());
  EXPECT_FALSE(fs::exists(tmp / "p/site/manifest.json"));
}

TEST(BuildProjectTest, StaleEmbedIsWarning) {
  TempDir tmp;
  CopyProject(tmp / "p");
  WriteBytes(tmp / "p/essay.md",
             "[x](txt/#d=b91dbd31061642ba&a=design@33)\n\n"
             "[y](txt/#d=b91dbd31061642ba&a=design@9999)\n");
  const BuildResult result = BuildProject(Project::Open(tmp / "p"));
  EXPECT_TRUE(result.diagnostics.empty());
  ASSERT_EQ(result.warnings.size(), 2u);
  EXPECT_EQ(result.warnings[0].rfind("block 1: ", 0), 0u);
  EXPECT_EQ(BuildSummary(result), "2 embeds, 2 warnings");
}

TEST(BuildProjectTest, EmptyProject) {
  TempDir tmp;
  InitProject(tmp / "p");
  const BuildResult result = BuildProject(Project::Open(tmp / "p"));
  EXPECT_EQ(BuildSummary(result), "0 embeds, 0 warnings");
}

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    CopyProject(tmp_ / "p");
    BuildProject(Project::Open(tmp_ / "p"));
    site_ = tmp_ / "p/site";
  }
  TempDir tmp_;
  fs::path site_;
};

TEST_F(ServerTest, ServesBuiltFilesVerbatim) {
  StaticServer server(site_);
  const int port = server.Bind("127.0.0.1", 0);
  std::thread worker([&] { server.Run(); });
  httplib::Client client("127.0.0.1", port);
  const auto manifest = client.Get("/manifest.json");
  ASSERT_TRUE(manifest);
  EXPECT_EQ(manifest->status, 200);
  EXPECT_EQ(manifest->body, ReadBytes(site_ / "manifest.json"));
  EXPECT_EQ(manifest->get_header_value("Cache-Control"), "no-store");
  EXPECT_EQ(
      manifest->get_header_value("Content-Type").rfind("application/json", 0),
      0u);
  const auto index = client.Get("/");
  ASSERT_TRUE(index);
  EXPECT_EQ(index->body, ReadBytes(site_ / "index.html"));
  const auto doc = client.Get("/txt/doc.json");
  ASSERT_TRUE(doc);
  EXPECT_EQ(doc->body, ReadBytes(site_ / "txt/doc.json"));
  const auto missing = client.Get("/nope.html");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  server.Stop();
  worker.join();
}

TEST_F(ServerTest, PortInUse) {
  StaticServer first(site_);
  const int port = first.Bind("127.0.0.1", 0);
  StaticServer second(site_);
  EXPECT_THROW(second.Bind("127.0.0.1", port), ServeError);
}

TEST_F(ServerTest, MissingRoot) {
  StaticServer server(tmp_ / "absent");
  EXPECT_THROW(server.Bind("127.0.0.1", 0), ServeError);
}

}  // namespace
}  // namespace textarium
