// Copyright 2026 The smarthome-benefits Authors
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

#include "server.hpp"

#include "httplib.h"

namespace smarthome::http {

struct Server::Impl {
  const shb_engine* engine;
  std::string cors_origin;
  httplib::Server server;

  void dispatch(const httplib::Request& req, httplib::Response& res) {
    int status = 500;
    char* body = nullptr;
    char* content_type = nullptr;
    if (shb_handle_request(engine, req.method.c_str(), req.path.c_str(), req.body.c_str(), &status, &body,
                           &content_type) != SHB_OK) {
      res.status = 500;
      res.set_content(std::string("{\"error\":{\"kind\":\"internal\",\"message\":\"") + "request dispatch failed" +
                          "\"}}",
                      "application/json");
      return;
    }
    res.status = status;
    res.set_content(body, content_type);
    shb_free_string(body);
    shb_free_string(content_type);
  }
};

Server::Server(const shb_engine* engine, std::string cors_origin) : impl_(std::make_unique<Impl>()) {
  impl_->engine = engine;
  impl_->cors_origin = std::move(cors_origin);
  auto& s = impl_->server;
  s.set_default_headers({{"Access-Control-Allow-Origin", impl_->cors_origin},
                         {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                         {"Access-Control-Allow-Headers", "Content-Type"}});
  const auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->dispatch(req, res); };
  s.Get(".*", handler);
  s.Post(".*", handler);
  s.Put(".*", handler);
  s.Delete(".*", handler);
  s.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Server::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->server.stop();
}

bool Server::running() const { return impl_->server.is_running(); }

}  // namespace smarthome::http
