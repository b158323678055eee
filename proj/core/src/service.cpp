// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/service.hpp"

#include <httplib.h>
#include "json.hpp"

#include "spellkit/errors.hpp"

namespace spellkit {
namespace {

using nlohmann::json;

Service::Response error_response(int status, std::string_view code, std::string_view message) {
  json j{{"error", {{"code", code}, {"message", message}}}};
  // parser messages can quote the offending bytes
  return {status, j.dump(2, ' ', false, json::error_handler_t::replace) + "\n"};
}

Service::Response ok(const json& j) { return {200, j.dump(2) + "\n"}; }

DetectorConfig read_options(const json& request, const DetectorConfig& defaults) {
  DetectorConfig cfg = defaults;
  if (!request.contains("options")) return cfg;
  const json& o = request["options"];
  if (!o.is_object()) throw InputError("\"options\" must be an object");
  for (const auto& [key, value] : o.items()) {
    if (key == "max_dist") cfg.max_dist = value.get<std::size_t>();
    else if (key == "margin") cfg.margin = value.get<double>();
    else if (key == "top_k") cfg.top_k = value.get<std::size_t>();
    else if (key == "use_perto") cfg.use_perto = value.get<bool>();
    else throw InputError("unknown option '" + key + "'");
  }
  return cfg;
}

const std::string& text_field(const json& request) {
  if (!request.is_object() || !request.contains("text") || !request["text"].is_string())
    throw InputError("request needs a string field \"text\"");
  return request["text"].get_ref<const std::string&>();
}

}  // namespace

struct Service::Impl {
  const Engine& engine;
  ServiceOptions options;
  httplib::Server server;

  Impl(const Engine& e, ServiceOptions o) : engine(e), options(std::move(o)) {}

  Response check(const json& request) const {
    const std::string& text = text_field(request);
    DetectorConfig cfg;
    try {
      cfg = read_options(request, engine.defaults());
      cfg.validate();
    } catch (const Error& e) {
      return error_response(400, "invalid_option", e.what());
    }
    const CheckResponse result = engine.check(text, cfg);
    for (const auto& s : result.sentences) {
      if (s.error && (s.error->code == "scorer_unavailable" || s.error->code == "scorer_protocol"))
        return error_response(503, "scorer_unavailable", s.error->message);
    }
    return {200, result.to_json()};
  }

  Response apply(const json& request) const {
    const std::string& text = text_field(request);
    if (!request.contains("corrections") || !request["corrections"].is_array())
      throw InputError("request needs an array field \"corrections\"");
    std::vector<AcceptedCorrection> accepted;
    for (const auto& c : request["corrections"]) {
      accepted.push_back({c.at("sentence_id").get<std::size_t>(), c.at("token_index").get<std::size_t>(),
                          c.at("original").get<std::string>(), c.at("replacement").get<std::string>()});
    }
    try {
      return ok({{"corrected_text", engine.apply(text, accepted)}});
    } catch (const InputError& e) {
      return error_response(422, "correction_mismatch", e.what());
    }
  }

  Response health() const {
    const ScorerHealth scorer = engine.scorer().health();
    return ok({{"status", scorer.ok ? "ok" : "degraded"},
               {"lexicon_entries", engine.lexicon().size()},
               {"scorer", {{"backend", engine.scorer().backend()}, {"ok", scorer.ok}, {"detail", scorer.detail}}}});
  }

  Response config() const {
    try {
      return ok(json::parse(options.effective_config_json));
    } catch (const json::exception&) {
      return error_response(500, "internal", "effective configuration is not valid JSON");
    }
  }
};

Service::Service(const Engine& engine, ServiceOptions options)
    : impl_(std::make_unique<Impl>(engine, std::move(options))) {}

Service::~Service() = default;

Service::Response Service::handle(std::string_view method, std::string_view path, std::string_view body) const {
  struct Route {
    std::string_view method;
    std::string_view path;
  };
  static constexpr Route kRoutes[] = {
      {"POST", "/v1/check"}, {"POST", "/v1/apply"}, {"GET", "/v1/health"}, {"GET", "/v1/config"}};
  bool path_known = false;
  for (const auto& r : kRoutes) path_known |= r.path == path;
  if (!path_known) return error_response(404, "not_found", "no such endpoint: " + std::string(path));
  bool route_known = false;
  for (const auto& r : kRoutes) route_known |= r.path == path && r.method == method;
  if (!route_known) return error_response(405, "method_not_allowed", std::string(method) + " is not allowed here");

  if (path == "/v1/health") return impl_->health();
  if (path == "/v1/config") return impl_->config();

  if (body.size() > impl_->options.max_body_bytes)
    return error_response(413, "payload_too_large", "request body exceeds the size limit");
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return error_response(400, "invalid_json", e.what());
  }
  try {
    return path == "/v1/check" ? impl_->check(request) : impl_->apply(request);
  } catch (const DecodeError& e) {
    return error_response(400, "invalid_encoding", e.what());
  } catch (const InputError& e) {
    return error_response(400, "invalid_request", e.what());
  } catch (const json::exception& e) {
    return error_response(400, "invalid_request", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

int Service::bind(const std::string& host, int port) {
  auto& server = impl_->server;
  // one byte of slack so oversized bodies reach handle() and get a JSON error
  server.set_payload_max_length(impl_->options.max_body_bytes + 1);
  const auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Put(".*", forward);
  server.Delete(".*", forward);
  server.Patch(".*", forward);
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const Response r = error_response(res.status, res.status == 413 ? "payload_too_large" : "http_error",
                                      httplib::status_message(res.status));
    res.set_content(r.body, "application/json");
  });
  if (port == 0) return server.bind_to_any_port(host);
  return server.bind_to_port(host, port) ? port : -1;
}

void Service::listen() { impl_->server.listen_after_bind(); }

void Service::stop() { impl_->server.stop(); }

}  // namespace spellkit
