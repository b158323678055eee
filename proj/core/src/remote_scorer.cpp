// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/remote_scorer.hpp"

#include <cmath>
#include <condition_variable>
#include <mutex>

#include <httplib.h>
#include "json.hpp"

#include "spellkit/errors.hpp"

namespace spellkit {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint parse_endpoint(const std::string& url) {
  constexpr std::string_view scheme = "http://";
  if (url.rfind(scheme, 0) != 0) throw ConfigError("remote scorer endpoint must start with http://");
  const auto slash = url.find('/', scheme.size());
  Endpoint e;
  e.origin = url.substr(0, slash);
  e.path = slash == std::string::npos ? "/" : url.substr(slash);
  if (e.origin.size() == scheme.size()) throw ConfigError("remote scorer endpoint has no host");
  return e;
}

}  // namespace

namespace wire {

std::string encode_request(const MaskedQuery& query) {
  json j;
  j["tokens"] = query.tokens;
  j["mask_index"] = query.mask_index;
  j["candidates"] = query.vocabulary;
  return j.dump();
}

ScoreDistribution decode_response(std::string_view body, const MaskedQuery& query) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ScorerSchemaError(std::string("response is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("scores") || !j["scores"].is_object())
    throw ScorerSchemaError("response lacks a \"scores\" object");
  std::map<std::string, double, std::less<>> raw;
  for (const auto& [word, value] : j["scores"].items()) {
    if (!value.is_number()) throw ScorerSchemaError("score for '" + word + "' is not a number");
    const double v = value.get<double>();
    if (!std::isfinite(v) || v < 0.0)
      throw ScorerSchemaError("score for '" + word + "' is negative or not finite");
    raw.emplace(word, v);
  }
  return ScoreDistribution::normalized(raw, query.vocabulary);
}

MaskedQuery decode_request(std::string_view body) {
  try {
    const json j = json::parse(body);
    MaskedQuery q;
    q.tokens = j.at("tokens").get<std::vector<std::string>>();
    q.mask_index = j.at("mask_index").get<std::size_t>();
    q.vocabulary = j.at("candidates").get<std::vector<std::string>>();
    q.validate();
    return q;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed scoring request: ") + e.what());
  }
}

}  // namespace wire

std::string redact_url(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) return std::string(url);
  const auto host_begin = scheme_end + 3;
  const auto authority_end = url.find('/', host_begin);
  const auto at = url.rfind('@', authority_end == std::string_view::npos ? url.size() : authority_end);
  if (at == std::string_view::npos || at < host_begin) return std::string(url);
  return std::string(url.substr(0, host_begin)) + "***@" + std::string(url.substr(at + 1));
}

struct RemoteScorer::Impl {
  Endpoint endpoint;
  std::mutex mutex;
  std::condition_variable cv;
  std::size_t in_flight = 0;
  std::size_t limit = 1;

  class Slot {
   public:
    explicit Slot(Impl& impl) : impl_(impl) {
      std::unique_lock lock(impl_.mutex);
      impl_.cv.wait(lock, [&] { return impl_.in_flight < impl_.limit; });
      ++impl_.in_flight;
    }
    ~Slot() {
      {
        std::lock_guard lock(impl_.mutex);
        --impl_.in_flight;
      }
      impl_.cv.notify_one();
    }
    Slot(const Slot&) = delete;
    Slot& operator=(const Slot&) = delete;

   private:
    Impl& impl_;
  };
};

RemoteScorer::RemoteScorer(RemoteScorerOptions options)
    : options_(std::move(options)), impl_(std::make_unique<Impl>()) {
  impl_->endpoint = parse_endpoint(options_.endpoint);
  if (options_.max_in_flight == 0) throw ConfigError("remote scorer max_in_flight must be positive");
  if (options_.timeout.count() <= 0) throw ConfigError("remote scorer timeout must be positive");
  impl_->limit = options_.max_in_flight;
}

RemoteScorer::~RemoteScorer() = default;

ScoreDistribution RemoteScorer::score(const MaskedQuery& query) const {
  query.validate();
  const std::string body = wire::encode_request(query);
  Impl::Slot slot(*impl_);

  httplib::Client client(impl_->endpoint.origin);
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  auto res = client.Post(impl_->endpoint.path, body, "application/json");
  if (!res) {
    throw ScorerTransportError("remote scorer " + redact_url(options_.endpoint) + ": " +
                               httplib::to_string(res.error()));
  }
  if (res->status != 200) throw ScorerStatusError("remote scorer returned HTTP " + std::to_string(res->status), res->status);
  return wire::decode_response(res->body, query);
}

ScorerHealth RemoteScorer::health() const {
  MaskedQuery probe;
  probe.tokens = {"."};
  probe.mask_index = 0;
  probe.vocabulary = {"."};
  try {
    score(probe);
    return {true, "ok"};
  } catch (const ScorerError& e) {
    return {false, e.what()};
  }
}

}  // namespace spellkit
