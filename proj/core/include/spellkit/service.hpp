// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "spellkit/engine.hpp"

namespace spellkit {

struct ServiceOptions {
  std::size_t max_body_bytes = 1 << 20;
  /// Settings echoed by GET /v1/config.
  std::string effective_config_json = "{}";
};

/// HTTP/JSON front end over an Engine:
///   POST /v1/check   text + options -> CheckResponse
///   POST /v1/apply   text + accepted corrections -> corrected text
///   GET  /v1/health  engine and scorer status
///   GET  /v1/config  effective settings
/// The engine is never mutated by a request.
class Service {
 public:
  struct Response {
    int status = 200;
    std::string body;
  };

  explicit Service(const Engine& engine, ServiceOptions options = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Socket-free dispatch used by the HTTP layer and by tests.
  Response handle(std::string_view method, std::string_view path, std::string_view body) const;

  /// Binds `host:port` (port 0 picks a free port) and returns the bound port,
  /// or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace spellkit
