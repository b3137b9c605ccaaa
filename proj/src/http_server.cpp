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

#include "tokensat/http_server.hpp"

#include <iostream>

#include "httplib.h"

namespace tokensat {
namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const nlohmann::ordered_json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, const ServiceError& e) {
  nlohmann::ordered_json body;
  body["reason"] = e.reason();
  body["error"] = e.what();
  send(res, e.status(), body);
}

nlohmann::json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return nlohmann::json::object();
  try {
    return nlohmann::json::parse(req.body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ServiceError(400, "malformed-request", std::string("invalid JSON body: ") + e.what());
  }
}

template <typename Handler>
httplib::Server::Handler guarded(int ok_status, Handler handler) {
  return [ok_status, handler](const httplib::Request& req, httplib::Response& res) {
    try {
      send(res, ok_status, handler(req));
    } catch (const ServiceError& e) {
      send_error(res, e);
    } catch (const std::exception& e) {
      send_error(res, ServiceError(500, "internal-error", e.what()));
    }
  };
}

}  // namespace

HttpServer::HttpServer(GameService& service, std::filesystem::path static_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  install_routes();
  if (!static_dir.empty()) {
    if (!server_->set_mount_point("/", static_dir.string()))
      std::cerr << "warning: static directory " << static_dir << " not found\n";
  }
}

HttpServer::~HttpServer() { stop(); }

void HttpServer::install_routes() {
  server_->Post("/api/games", guarded(201, [this](const httplib::Request& req) {
                  return service_.create(parse_body(req));
                }));
  server_->Get(R"(/api/games/([^/]+))", guarded(200, [this](const httplib::Request& req) {
                 return service_.get(req.matches[1]);
               }));
  server_->Post(R"(/api/games/([^/]+)/moves)", guarded(200, [this](const httplib::Request& req) {
                  return service_.move(req.matches[1], parse_body(req));
                }));
  server_->Post(R"(/api/games/([^/]+)/undo)", guarded(200, [this](const httplib::Request& req) {
                  return service_.undo(req.matches[1]);
                }));
  server_->Get(R"(/api/games/([^/]+)/hint)", guarded(200, [this](const httplib::Request& req) {
                 return service_.hint(req.matches[1]);
               }));
  server_->Get("/api/instances", guarded(200, [this](const httplib::Request&) {
                 return service_.list_instances();
               }));
}

bool HttpServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

int HttpServer::bind_to_any_port(const std::string& host) {
  return server_->bind_to_any_port(host);
}

bool HttpServer::listen_after_bind() { return server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_ && server_->is_running()) server_->stop();
}

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace tokensat
