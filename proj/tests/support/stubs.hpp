// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <thread>

#include "spellkit/scorer.hpp"

namespace httplib {
class Server;
}

namespace spellkit::testing {

/// Scores from a fixed table, independent of context; words missing from the
/// table get `fallback`.
class FixedScorer final : public ContextScorer {
 public:
  explicit FixedScorer(std::map<std::string, double, std::less<>> weights, double fallback = 1.0)
      : weights_(std::move(weights)), fallback_(fallback) {}

  ScoreDistribution score(const MaskedQuery& query) const override;
  std::string backend() const override { return "fixed"; }

 private:
  std::map<std::string, double, std::less<>> weights_;
  double fallback_;
};

/// Scorer that fails every call with the given exception factory.
class FailingScorer final : public ContextScorer {
 public:
  explicit FailingScorer(std::function<void()> thrower) : thrower_(std::move(thrower)) {}
  ScoreDistribution score(const MaskedQuery&) const override {
    thrower_();
    return {};
  }
  std::string backend() const override { return "failing"; }
  ScorerHealth health() const override { return {false, "always failing"}; }

 private:
  std::function<void()> thrower_;
};

/// Minimal HTTP server on 127.0.0.1 with a free port, answering POST on any
/// path with `handler(body) -> (status, body)`.
class StubHttpServer {
 public:
  using Handler = std::function<std::pair<int, std::string>(const std::string& body)>;

  explicit StubHttpServer(Handler handler, std::chrono::milliseconds delay = std::chrono::milliseconds(0));
  ~StubHttpServer();

  std::string url(const std::string& path = "/score") const;
  int port() const { return port_; }
  int max_concurrent() const { return max_concurrent_.load(); }
  int requests() const { return requests_.load(); }

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = -1;
  std::atomic<int> active_{0};
  std::atomic<int> max_concurrent_{0};
  std::atomic<int> requests_{0};
};

/// Port with nothing listening on it (bound then released).
int unused_port();

}  // namespace spellkit::testing
