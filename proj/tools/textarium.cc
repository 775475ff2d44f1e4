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

// Command-line front end: init, import, state encode/decode, build, serve.

#include <pthread.h>
#include <signal.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "textarium/argument.h"
#include "textarium/errors.h"
#include "textarium/fragment_codec.h"
#include "textarium/project.h"
#include "textarium/server.h"
#include "textarium/state.h"
#include "textarium/state_json.h"
#include "textarium/text_model.h"

namespace textarium {
namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitScaffold = 2;
constexpr int kExitImport = 3;
constexpr int kExitCodec = 4;
constexpr int kExitBuild = 5;
constexpr int kExitServe = 6;

fs::path ProjectRoot() {
  if (const char* root = std::getenv("TEXTARIUM_ROOT"); root && *root) {
    return root;
  }
  return fs::current_path();
}

int Fail(int code, const std::string& message) {
  std::cerr << "textarium: " << message << "\n";
  return code;
}

int RunInit(const std::string& dir) {
  try {
    InitProject(dir);
  } catch (const Error& e) {
    return Fail(kExitScaffold, e.what());
  }
  std::cout << "initialized " << dir << "\n";
  return kExitOk;
}

int RunImport(const std::string& file) {
  try {
    Project project = Project::Open(ProjectRoot());
    const Document doc = ImportText(project, file);
    std::cout << "fingerprint: " << doc.fingerprint() << "\n"
              << "tokens: " << doc.token_count() << "\n";
  } catch (const Error& e) {
    return Fail(kExitImport, e.what());
  }
  return kExitOk;
}

int RunStateEncode(const std::string& file) {
  try {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot read " + file);
    const std::string text(std::istreambuf_iterator<char>(in), {});
    std::cout << Encode(Canonicalize(StateFromJsonText(text))) << "\n";
  } catch (const Error& e) {
    return Fail(kExitCodec, e.what());
  }
  return kExitOk;
}

int RunStateDecode(std::string fragment, const std::string& text_file) {
  try {
    if (!fragment.empty() && fragment.front() != '#') fragment = "#" + fragment;
    std::optional<Document> doc;
    if (!text_file.empty()) {
      doc = Document::FromFile(text_file);
    } else {
      const ParsedFragment parsed = ParseFragment(fragment);
      if (!parsed.doc_fingerprint) {
        throw ValidationError("fragment names no document; pass --text");
      }
      for (Document& d : Project::Open(ProjectRoot()).LoadDocuments()) {
        if (d.fingerprint() == *parsed.doc_fingerprint) {
          doc = std::move(d);
          break;
        }
      }
      if (!doc) {
        throw DocumentMismatchError("no project document has fingerprint " +
                                    *parsed.doc_fingerprint);
      }
    }
    std::vector<std::string> unknown;
    const InterpretationState state = Decode(fragment, *doc, &unknown);
    for (const std::string& key : unknown) {
      std::cerr << "textarium: warning: ignored unknown key '" << key << "'\n";
    }
    std::cout << DumpJson(StateToJson(state));
  } catch (const Error& e) {
    return Fail(kExitCodec, e.what());
  }
  return kExitOk;
}

int RunBuild() {
  try {
    const Project project = Project::Open(ProjectRoot());
    const BuildResult result = BuildProject(project);
    for (const Diagnostic& d : result.diagnostics) {
      std::cerr << FormatDiagnostic(d) << "\n";
    }
    if (!result.diagnostics.empty()) {
      return Fail(kExitBuild, "build failed with " +
                                  std::to_string(result.diagnostics.size()) +
                                  " diagnostics");
    }
    for (const std::string& w : result.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    std::cout << BuildSummary(result) << "\n";
  } catch (const Error& e) {
    return Fail(kExitBuild, e.what());
  }
  return kExitOk;
}

int RunServe(std::optional<int> port_option, const std::string& host) {
  // Block termination signals before the server spawns threads so that
  // only sigwait below sees them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  std::optional<StaticServer> server;
  int port = 0;
  try {
    const Project project = Project::Open(ProjectRoot());
    server.emplace(project.out_dir());
    port = server->Bind(host, port_option.value_or(project.config().port));
    std::cout << "serving " << project.out_dir().string() << " at http://"
              << host << ":" << port << "/" << std::endl;
  } catch (const Error& e) {
    return Fail(kExitServe, e.what());
  }
  std::thread worker([&] { server->Run(); });
  int received = 0;
  sigwait(&signals, &received);
  server->Stop();
  worker.join();
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Textarium: interpret a text, encode states, compile essays"};
  app.require_subcommand(1);

  std::string init_dir;
  CLI::App* init = app.add_subcommand("init", "Scaffold a project");
  init->add_option("dir", init_dir, "Directory (absent or empty)")->required();

  std::string import_file;
  CLI::App* import = app.add_subcommand("import", "Import a source text");
  import->add_option("file", import_file, "UTF-8 text file")->required();

  CLI::App* state = app.add_subcommand("state", "Encode or decode states");
  state->require_subcommand(1);
  std::string state_file;
  CLI::App* encode = state->add_subcommand("encode", "State JSON to fragment");
  encode->add_option("file", state_file, "State JSON file")->required();
  std::string fragment;
  std::string text_file;
  CLI::App* decode = state->add_subcommand("decode", "Fragment to state JSON");
  decode->add_option("fragment", fragment, "URL fragment")->required();
  decode->add_option("--text", text_file,
                     "Source text (default: the project document named by d=)");

  CLI::App* build = app.add_subcommand("build", "Compile the essay site");

  std::optional<int> port;
  std::string host = "127.0.0.1";
  CLI::App* serve = app.add_subcommand("serve", "Serve the compiled site");
  serve->add_option("--port", port, "Port (default: config port)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Interface to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*init) return RunInit(init_dir);
  if (*import) return RunImport(import_file);
  if (*encode) return RunStateEncode(state_file);
  if (*decode) return RunStateDecode(fragment, text_file);
  if (*build) return RunBuild();
  if (*serve) return RunServe(port, host);
  return kExitUsage;
}

}  // namespace
}  // namespace textarium

int main(int argc, char** argv) { return textarium::Main(argc, argv); }
