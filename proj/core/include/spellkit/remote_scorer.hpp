// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "spellkit/scorer.hpp"

namespace spellkit {

struct RemoteScorerOptions {
  /// http://host[:port][/path]; the request is POSTed to the path (default "/").
  std::string endpoint;
  std::chrono::milliseconds timeout{10'000};
  /// Upper bound on concurrent in-flight requests from this adapter.
  std::size_t max_in_flight = 4;
};

/// Adapter for an external masked-language-model service speaking the JSON
/// wire protocol in docs/scoring-protocol.md. Transport failures, non-200
/// statuses, schema violations and missing words raise distinct ScorerError
/// subclasses; there is no fallback.
class RemoteScorer final : public ContextScorer {
 public:
  explicit RemoteScorer(RemoteScorerOptions options);
  ~RemoteScorer() override;

  RemoteScorer(const RemoteScorer&) = delete;
  RemoteScorer& operator=(const RemoteScorer&) = delete;

  ScoreDistribution score(const MaskedQuery& query) const override;
  std::string backend() const override { return "remote"; }
  /// Sends a one-word probe request.
  ScorerHealth health() const override;

  const RemoteScorerOptions& options() const noexcept { return options_; }

 private:
  struct Impl;
  RemoteScorerOptions options_;
  std::unique_ptr<Impl> impl_;
};

namespace wire {
/// {"tokens": [...], "mask_index": n, "candidates": [...]}
std::string encode_request(const MaskedQuery& query);
/// Parses {"scores": {...}} and renormalizes over query.vocabulary.
ScoreDistribution decode_response(std::string_view body, const MaskedQuery& query);
/// Inverse of encode_request, for services implementing the protocol.
MaskedQuery decode_request(std::string_view body);
}  // namespace wire

/// Hides user:password in a URL for display.
std::string redact_url(std::string_view url);

}  // namespace spellkit
