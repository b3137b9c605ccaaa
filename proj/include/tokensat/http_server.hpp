// Copyright 2026 The tokensat Authors
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

#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "tokensat/service.hpp"

namespace httplib {
class Server;
}

namespace tokensat {

// JSON-over-HTTP front end for GameService:
//   POST /api/games               create a session
//   GET  /api/games/{id}          snapshot
//   POST /api/games/{id}/moves    apply a move
//   POST /api/games/{id}/undo     revert the last move
//   GET  /api/games/{id}/hint     suggest a move
//   GET  /api/instances           catalog
// Static UI assets, when a directory is given, are served at /.
class HttpServer {
 public:
  HttpServer(GameService& service, std::filesystem::path static_dir = {});
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Blocks until stop().
  bool listen(const std::string& host, int port);
  // Binds to a free port and returns it (or -1); call listen_after_bind().
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  void install_routes();

  GameService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace tokensat
