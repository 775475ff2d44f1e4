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

#ifndef TEXTARIUM_SERVER_H_
#define TEXTARIUM_SERVER_H_

#include <filesystem>
#include <memory>
#include <string>

namespace textarium {

// Serves a directory of static files over HTTP with Cache-Control: no-store.
// GET and HEAD only; nothing is computed per request.
class StaticServer {
 public:
  explicit StaticServer(std::filesystem::path root);
  ~StaticServer();
  StaticServer(const StaticServer&) = delete;
  StaticServer& operator=(const StaticServer&) = delete;

  // Binds to host:port (port 0 picks a free one) and returns the port.
  // Throws ServeError when the root is missing or the port is taken.
  int Bind(const std::string& host, int port);

  // Serves until Stop() is called.
  void Run();

  // Safe to call from another thread.
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace textarium

#endif  // TEXTARIUM_SERVER_H_
