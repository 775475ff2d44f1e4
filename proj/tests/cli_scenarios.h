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

#ifndef TEXTARIUM_TESTS_CLI_SCENARIOS_H_
#define TEXTARIUM_TESTS_CLI_SCENARIOS_H_

// Scripted command-line runs, one per documented exit code path.

#include <signal.h>

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "httplib.h"
#include "test_util.h"
#include "textarium/server.h"

namespace textarium::testing {

struct CliScenario {
  std::string name;
  int expected_exit = 0;
  int actual_exit = -1;
  std::string detail;

  bool passed() const { return expected_exit == actual_exit; }
};

inline std::string CliPath() { return TEXTARIUM_CLI_PATH; }

inline CliScenario Scenario(std::string name, int expected,
                            const RunResult& result) {
  return {std::move(name), expected, result.exit_code, result.err};
}

// Serves the fixture project, fetches manifest.json and stops with SIGTERM.
inline CliScenario ServeAndStop(const std::filesystem::path& root) {
  CliScenario scenario{"serve then SIGTERM", 0, -1, {}};
  Process serve({CliPath(), "serve", "--port", "0"}, root);
  if (!serve.WaitForOutput("\n", std::chrono::seconds(10))) {
    scenario.detail = "server did not start: " + serve.err();
    return scenario;
  }
  const std::string banner = serve.out();
  const std::size_t colon = banner.rfind(':');
  const int port = std::stoi(banner.substr(colon + 1));
  httplib::Client client("127.0.0.1", port);
  const auto response = client.Get("/manifest.json");
  serve.Signal(SIGTERM);
  const int code = serve.Wait();
  if (!response || response->status != 200 ||
      response->body != ReadBytes(root / "site/manifest.json")) {
    scenario.detail = "manifest.json not served verbatim";
    return scenario;
  }
  scenario.actual_exit = code;
  return scenario;
}

inline std::vector<CliScenario> RunCliScenarios() {
  namespace fs = std::filesystem;
  const std::string cli = CliPath();
  TempDir tmp;
  std::vector<CliScenario> out;

  out.push_back(Scenario("init new directory", 0,
                         RunCommand({cli, "init", (tmp / "fresh").string()})));
  out.push_back(Scenario("init again", 2,
                         RunCommand({cli, "init", (tmp / "fresh").string()})));
  out.push_back(Scenario(
      "import text", 0,
      RunCommand({cli, "import", FixturePath("cautious_design.txt").string()},
                 tmp / "fresh")));
  WriteBytes(tmp / "binary.bin", std::string("\x89PNG\r\n\x1a\n\0\0", 10));
  out.push_back(
      Scenario("import binary file", 3,
               RunCommand({cli, "import", (tmp / "binary.bin").string()},
                          tmp / "fresh")));
  out.push_back(
      Scenario("import missing file", 3,
               RunCommand({cli, "import", (tmp / "missing.txt").string()},
                          tmp / "fresh")));
  out.push_back(Scenario(
      "import outside a project", 3,
      RunCommand({cli, "import", FixturePath("cautious_design.txt").string()},
                 tmp.path())));

  out.push_back(
      Scenario("state encode", 0,
               RunCommand({cli, "state", "encode",
                           FixturePath("state_design.json").string()})));
  WriteBytes(tmp / "overlap.json",
             R"({"docFingerprint": "b91dbd31061642ba", "annotations": [)"
             R"({"id": 0, "start": 3, "end": 5, "surface": "a b c"},)"
             R"({"id": 1, "start": 5, "end": 6, "surface": "c d"}]})");
  out.push_back(Scenario(
      "state encode overlapping spans", 4,
      RunCommand({cli, "state", "encode", (tmp / "overlap.json").string()})));
  out.push_back(Scenario(
      "state decode", 0,
      RunCommand({cli, "state", "decode",
                  "#d=b91dbd31061642ba&a=design@32,designed@155,Designing@183"},
                 tmp / "fresh")));
  out.push_back(
      Scenario("state decode malformed", 4,
               RunCommand({cli, "state", "decode", "#a=@@", "--text",
                           FixturePath("cautious_design.txt").string()})));
  out.push_back(Scenario(
      "state decode stale surface", 4,
      RunCommand({cli, "state", "decode", "#d=b91dbd31061642ba&a=design@33"},
                 tmp / "fresh")));

  CopyProject(tmp / "good");
  out.push_back(Scenario("build", 0, RunCommand({cli, "build"}, tmp / "good")));
  CopyProject(tmp / "broken");
  fs::copy_file(FixturePath("broken_essay.md"), tmp / "broken/essay.md",
                fs::copy_options::overwrite_existing);
  out.push_back(Scenario("build broken essay", 5,
                         RunCommand({cli, "build"}, tmp / "broken")));
  out.push_back(Scenario("build outside a project", 5,
                         RunCommand({cli, "build"}, tmp.path())));

  out.push_back(ServeAndStop(tmp / "good"));
  {
    StaticServer holder(tmp / "good/site");
    const int busy = holder.Bind("127.0.0.1", 0);
    out.push_back(
        Scenario("serve on a busy port", 6,
                 RunCommand({cli, "serve", "--port", std::to_string(busy)},
                            tmp / "good")));
  }
  out.push_back(
      Scenario("serve before build", 6,
               RunCommand({cli, "serve", "--port", "0"}, tmp / "broken")));
  out.push_back(
      Scenario("unknown subcommand", 1, RunCommand({cli, "frobnicate"})));
  return out;
}

}  // namespace textarium::testing

#endif  // TEXTARIUM_TESTS_CLI_SCENARIOS_H_
