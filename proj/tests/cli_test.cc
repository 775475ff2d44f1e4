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

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "cli_scenarios.h"
#include "test_util.h"

namespace textarium {
namespace {

namespace fs = std::filesystem;
using testing::CliPath;
using testing::CopyProject;
using testing::FixturePath;
using testing::ReadBytes;
using testing::RunCommand;
using testing::TempDir;

constexpr char kDesignFragment[] =
    "#d=b91dbd31061642ba&a=design@32,designed@155,Designing@183"
    "&g=design:0+1+2";

TEST(CliTest, ExitCodes) {
  for (const testing::CliScenario& s : testing::RunCliScenarios()) {
    EXPECT_EQ(s.actual_exit, s.expected_exit) << s.name << ": " << s.detail;
  }
}

TEST(CliTest, ImportReportsFingerprint) {
  TempDir tmp;
  ASSERT_EQ(RunCommand({CliPath(), "init", (tmp / "p").string()}).exit_code, 0);
  const auto result = RunCommand(
      {CliPath(), "import", FixturePath("cautious_design.txt").string()},
      tmp / "p");
  EXPECT_EQ(result.out, "fingerprint: b91dbd31061642ba\ntokens: 383\n");
  EXPECT_TRUE(fs::is_regular_file(tmp / "p/site/txt/doc.json"));
}

TEST(CliTest, RootFallsBackToWorkingDirectory) {
  TempDir tmp;
  CopyProject(tmp / "p");
  const auto result = RunCommand({CliPath(), "build"}, {}, tmp / "p");
  EXPECT_EQ(result.exit_code, 0) << result.err;
  EXPECT_TRUE(fs::is_regular_file(tmp / "p/site/manifest.json"));
}

TEST(CliTest, StateEncodeDecode) {
  const auto encoded = RunCommand({CliPath(), "state", "encode",
                                   FixturePath("state_design.json").string()});
  EXPECT_EQ(encoded.out, std::string(kDesignFragment) + "\n");
  const auto decoded =
      RunCommand({CliPath(), "state", "decode", kDesignFragment, "--text",
                  FixturePath("cautious_design.txt").string()});
  EXPECT_EQ(decoded.exit_code, 0) << decoded.err;
  EXPECT_EQ(decoded.out, ReadBytes(FixturePath("state_design.json")));
  EXPECT_EQ(decoded.err, "");
}

TEST(CliTest, DecodeWarnsOnUnknownKey) {
  const auto result =
      RunCommand({CliPath(), "state", "decode", "d=b91dbd31061642ba&zz=1",
                  "--text", FixturePath("cautious_design.txt").string()});
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.err, "textarium: warning: ignored unknown key 'zz'\n");
}

TEST(CliTest, BuildOutput) {
  TempDir tmp;
  CopyProject(tmp / "good");
  EXPECT_EQ(RunCommand({CliPath(), "build"}, tmp / "good").out,
            "3 embeds, 0 warnings\n");

  CopyProject(tmp / "broken");
  fs::copy_file(FixturePath("broken_essay.md"), tmp / "broken/essay.md",
                fs::copy_options::overwrite_existing);
  const auto broken = RunCommand({CliPath(), "build"}, tmp / "broken");
  EXPECT_EQ(broken.exit_code, 5);
  EXPECT_EQ(broken.out, "");
  std::size_t lines = 0;
  for (std::size_t at = broken.err.find("block "); at != std::string::npos;
       at = broken.err.find("\nblock ", at + 1)) {
    ++lines;
  }
  EXPECT_EQ(lines, 2u) << broken.err;
  EXPECT_NE(broken.err.find(": syntax: "), std::string::npos);
  EXPECT_NE(broken.err.find(": unknown-document: "), std::string::npos);
}

}  // namespace
}  // namespace textarium
