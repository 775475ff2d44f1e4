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

#ifndef TEXTARIUM_TESTS_TEST_UTIL_H_
#define TEXTARIUM_TESTS_TEST_UTIL_H_

// Temporary directories, file helpers and subprocess runs for tests.

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <stdlib.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

extern char** environ;

namespace textarium::testing {

inline std::filesystem::path FixturePath(const std::string& relative) {
  return std::filesystem::path(TEXTARIUM_FIXTURE_DIR) / relative;
}

inline std::string ReadBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline void WriteBytes(const std::filesystem::path& path,
                       const std::string& bytes) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
}

// A fresh directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "textarium-XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const {
    return path_ / rel;
  }

 private:
  std::filesystem::path path_;
};

// Copies the fixture project into `dest`.
inline void CopyProject(const std::filesystem::path& dest) {
  std::filesystem::copy(FixturePath("project"), dest,
                        std::filesystem::copy_options::recursive);
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// A child process whose stdout and stderr go to temporary files.
class Process {
 public:
  // Starts `argv` with TEXTARIUM_ROOT set to `root` (when non-empty).
  Process(const std::vector<std::string>& argv,
          const std::filesystem::path& root = {},
          const std::filesystem::path& cwd = {}) {
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_addopen(&actions, 1, out_path().c_str(),
                                     O_WRONLY | O_CREAT | O_TRUNC, 0644);
    posix_spawn_file_actions_addopen(&actions, 2, err_path().c_str(),
                                     O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (!cwd.empty()) {
      posix_spawn_file_actions_addchdir_np(&actions, cwd.c_str());
    }
    std::vector<std::string> env;
    for (char** e = environ; *e != nullptr; ++e) {
      if (std::string(*e).rfind("TEXTARIUM_ROOT=", 0) != 0) env.push_back(*e);
    }
    if (!root.empty()) env.push_back("TEXTARIUM_ROOT=" + root.string());
    std::vector<char*> c_env;
    for (std::string& e : env) c_env.push_back(e.data());
    c_env.push_back(nullptr);
    std::vector<std::string> args = argv;
    std::vector<char*> c_args;
    for (std::string& a : args) c_args.push_back(a.data());
    c_args.push_back(nullptr);
    const int rc = posix_spawn(&pid_, c_args[0], &actions, nullptr,
                               c_args.data(), c_env.data());
    posix_spawn_file_actions_destroy(&actions);
    if (rc != 0) throw std::runtime_error("spawn failed: " + argv[0]);
  }
  ~Process() {
    if (pid_ > 0) {
      kill(pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
    }
  }
  Process(const Process&) = delete;
  Process& operator=(const Process&) = delete;

  void Signal(int signal) const { kill(pid_, signal); }

  // Waits for exit; -1 when the child died from a signal.
  int Wait() {
    int status = 0;
    waitpid(pid_, &status, 0);
    pid_ = 0;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  // Polls stdout until it contains `needle` or `timeout` elapses.
  bool WaitForOutput(const std::string& needle,
                     std::chrono::milliseconds timeout) const {
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    while (std::chrono::steady_clock::now() < deadline) {
      if (out().find(needle) != std::string::npos) return true;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    return false;
  }

  std::string out() const { return ReadBytes(out_path()); }
  std::string err() const { return ReadBytes(err_path()); }

 private:
  std::string out_path() const { return (io_ / "stdout").string(); }
  std::string err_path() const { return (io_ / "stderr").string(); }

  TempDir io_;
  pid_t pid_ = 0;
};

// Runs `argv` to completion.
inline RunResult RunCommand(const std::vector<std::string>& argv,
                            const std::filesystem::path& root = {},
                            const std::filesystem::path& cwd = {}) {
  Process process(argv, root, cwd);
  RunResult result;
  result.exit_code = process.Wait();
  result.out = process.out();
  result.err = process.err();
  return result;
}

}  // namespace textarium::testing

#endif  // TEXTARIUM_TESTS_TEST_UTIL_H_
