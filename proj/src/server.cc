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

#include "textarium/server.h"

#include <sys/socket.h>

#include <system_error>
#include <utility>

#include "httplib.h"
#include "textarium/errors.h"

namespace textarium {

struct StaticServer::Impl {
  std::filesystem::path root;
  httplib::Server server;
};

StaticServer::StaticServer(std::filesystem::path root)
    : impl_(std::make_unique<Impl>()) {
  impl_->root = std::move(root);
  // Exclusive binding: a second server on the same port must fail.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  impl_->server.set_file_extension_and_mimetype_mapping(
      "html", "text/html; charset=utf-8");
  impl_->server.set_file_extension_and_mimetype_mapping(
      "json", "application/json; charset=utf-8");
  impl_->server.set_file_extension_and_mimetype_mapping(
      "txt", "text/plain; charset=utf-8");
  impl_->server.set_file_extension_and_mimetype_mapping(
      "js", "text/javascript; charset=utf-8");
  impl_->server.set_file_extension_and_mimetype_mapping(
      "css", "text/css; charset=utf-8");
  impl_->server.set_file_request_handler(
      [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Cache-Control", "no-store");
      });
}

StaticServer::~StaticServer() { Stop(); }

int StaticServer::Bind(const std::string& host, int port) {
  std::error_code ec;
  if (!std::filesystem::is_directory(impl_->root, ec)) {
    throw ServeError(impl_->root.string() + " does not exist; run build first");
  }
  if (!impl_->server.set_mount_point("/", impl_->root.string())) {
    throw ServeError("cannot serve " + impl_->root.string());
  }
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw ServeError("cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw ServeError("cannot bind " + host + ":" + std::to_string(port) +
                     " (port in use?)");
  }
  return port;
}

void StaticServer::Run() { impl_->server.listen_after_bind(); }

void StaticServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace textarium
