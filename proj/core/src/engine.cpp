// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/engine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "spellkit/errors.hpp"
#include "spellkit/fourgram.hpp"

namespace spellkit {
namespace {

using nlohmann::json;

double round6(double v) { return std::round(v * 1e6) / 1e6; }

json span_json(const Span& s) { return json::array({s.begin, s.end}); }

json detection_json(const std::optional<Detection>& d) {
  if (!d) return nullptr;
  json j{{"token_index", d->token_index}, {"error_class", to_string(d->error_class)}};
  if (d->evidence) {
    j["evidence"] = {{"candidate", d->evidence->candidate},
                     {"candidate_score", round6(d->evidence->candidate_score)},
                     {"original_score", round6(d->evidence->original_score)}};
  }
  return j;
}

json correction_json(const Correction& c) {
  json candidates = json::array();
  for (const auto& cand : c.ranked_candidates) {
    candidates.push_back({{"word", cand.word},
                          {"distance", cand.distance},
                          {"edit_type", to_string(cand.edit_type)},
                          {"score", round6(cand.contextual_score.value_or(0.0))},
                          {"perto_match", cand.perto_match.value_or(false)}});
  }
  return {{"token_index", c.token_index},
          {"original", c.original},
          {"suggested", c.replacement},
          {"used_perto", c.used_perto},
          {"candidates", std::move(candidates)}};
}

json error_json(const std::optional<SentenceError>& e) {
  if (!e) return nullptr;
  return {{"code", e->code}, {"message", e->message}};
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Splices replacements into `text`; edits are (span, replacement) pairs with
// spans relative to `text` and non-overlapping.
std::string splice(std::string_view text, std::vector<std::pair<Span, std::string>> edits) {
  std::sort(edits.begin(), edits.end(),
            [](const auto& a, const auto& b) { return a.first.begin < b.first.begin; });
  std::string out;
  std::size_t at = 0;
  for (const auto& [span, replacement] : edits) {
    out.append(text.substr(at, span.begin - at));
    out.append(replacement);
    at = span.end;
  }
  out.append(text.substr(at));
  return out;
}

}  // namespace

EngineConfig EngineConfig::from_json(std::string_view json_text, const std::filesystem::path& base_dir) {
  EngineConfig c;
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw ConfigError("engine config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "lexicons") {
        for (const auto& p : value) c.lexicons.push_back(resolve(base_dir, p.get<std::string>()));
      } else if (key == "fourgram_model") {
        c.fourgram_model = resolve(base_dir, value.get<std::string>());
      } else if (key == "remote") {
        RemoteScorerOptions r;
        r.endpoint = value.at("endpoint").get<std::string>();
        if (value.contains("timeout_ms")) r.timeout = std::chrono::milliseconds(value["timeout_ms"].get<std::int64_t>());
        if (value.contains("max_in_flight")) r.max_in_flight = value["max_in_flight"].get<std::size_t>();
        c.remote = r;
      } else if (key == "normalizer") {
        c.normalizer_config = resolve(base_dir, value.get<std::string>());
      } else if (key == "perto_table") {
        c.perto_table = resolve(base_dir, value.get<std::string>());
      } else if (key == "index_cache") {
        c.index_cache = resolve(base_dir, value.get<std::string>());
      } else if (key == "detector") {
        for (const auto& [dk, dv] : value.items()) {
          if (dk == "max_dist") c.detector.max_dist = dv.get<std::size_t>();
          else if (dk == "margin") c.detector.margin = dv.get<double>();
          else if (dk == "top_k") c.detector.top_k = dv.get<std::size_t>();
          else if (dk == "use_perto") c.detector.use_perto = dv.get<bool>();
          else throw ConfigError("unknown detector setting '" + dk + "'");
        }
      } else {
        throw ConfigError("unknown engine setting '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("engine config: ") + e.what());
  }
  c.validate();
  return c;
}

EngineConfig EngineConfig::load(const std::filesystem::path& path) {
  return from_json(read_file(path), path.parent_path());
}

void EngineConfig::validate() const {
  if (lexicons.empty()) throw ConfigError("engine config needs at least one lexicon");
  if (fourgram_model.has_value() == remote.has_value())
    throw ConfigError("engine config needs exactly one scorer: fourgram_model or remote");
  detector.validate();
}

std::string EngineConfig::to_redacted_json() const {
  json j;
  j["lexicons"] = json::array();
  for (const auto& p : lexicons) j["lexicons"].push_back(p.generic_string());
  if (fourgram_model) j["fourgram_model"] = fourgram_model->generic_string();
  if (remote) {
    j["remote"] = {{"endpoint", redact_url(remote->endpoint)},
                   {"timeout_ms", remote->timeout.count()},
                   {"max_in_flight", remote->max_in_flight}};
  }
  if (normalizer_config) j["normalizer"] = normalizer_config->generic_string();
  if (perto_table) j["perto_table"] = perto_table->generic_string();
  if (index_cache) j["index_cache"] = index_cache->generic_string();
  j["detector"] = {{"max_dist", detector.max_dist},
                   {"margin", detector.margin},
                   {"top_k", detector.top_k},
                   {"use_perto", detector.use_perto}};
  return j.dump(2);
}

bool CheckResponse::scorer_failed() const {
  return std::any_of(sentences.begin(), sentences.end(), [](const SentenceResult& r) {
    return r.error && (r.error->code == "scorer_unavailable" || r.error->code == "scorer_protocol");
  });
}

std::string CheckResponse::to_json() const {
  json list = json::array();
  for (const auto& r : sentences) {
    json tokens = json::array();
    for (const auto& t : r.sentence.tokens) {
      tokens.push_back({{"index", t.index},
                        {"surface", t.surface},
                        {"span", span_json(t.span)},
                        {"kind", t.is_word() ? "word" : "pass_through"}});
    }
    list.push_back({{"sentence_id", r.sentence_id},
                    {"text", r.sentence.text},
                    {"span", span_json(r.sentence.span)},
                    {"tokens", std::move(tokens)},
                    {"detections", r.detection ? json::array({detection_json(r.detection)}) : json::array()},
                    {"corrections", r.correction ? json::array({correction_json(*r.correction)}) : json::array()},
                    {"error", error_json(r.error)},
                    {"corrected_text", r.corrected_text}});
  }
  json j{{"normalized_text", normalized_text}, {"corrected_text", corrected_text}, {"sentences", std::move(list)}};
  return j.dump(2) + "\n";
}

std::string check_record_json(const SentenceResult& result) {
  json j{{"sentence_id", result.sentence_id}, {"detection", detection_json(result.detection)}};
  if (result.error) j["error"] = error_json(result.error);
  return j.dump();
}

std::string correct_record_json(const SentenceResult& result) {
  json corrections = json::array();
  if (result.correction) corrections.push_back(correction_json(*result.correction));
  json j{{"sentence_id", result.sentence_id},
         {"detection", detection_json(result.detection)},
         {"corrections", std::move(corrections)},
         {"corrected_text", result.corrected_text}};
  if (result.error) j["error"] = error_json(result.error);
  return j.dump();
}

Engine::Engine(NormalizationConfig normalizer, Lexicon lexicon, PertoTable table,
               std::shared_ptr<const ContextScorer> scorer, DetectorConfig defaults,
               std::optional<std::filesystem::path> index_cache)
    : normalizer_(std::move(normalizer)),
      table_(std::move(table)),
      scorer_(std::move(scorer)),
      defaults_(defaults) {
  normalizer_.validate();
  defaults_.validate();
  if (!scorer_) throw ConfigError("engine needs a scorer");
  index_ = index_cache ? CandidateIndex::load_or_build(lexicon, *index_cache) : CandidateIndex(lexicon);
}

Engine Engine::from_config(const EngineConfig& config) {
  config.validate();
  NormalizationConfig normalizer =
      config.normalizer_config ? NormalizationConfig::load(*config.normalizer_config) : NormalizationConfig::defaults();
  Lexicon lexicon;
  for (const auto& path : config.lexicons) lexicon = merge(lexicon, Lexicon::load_file(path, normalizer));
  PertoTable table = config.perto_table ? PertoTable::load(*config.perto_table) : PertoTable::standard();
  std::shared_ptr<const ContextScorer> scorer;
  if (config.fourgram_model) {
    scorer = std::make_shared<FourGramModel>(FourGramModel::load(*config.fourgram_model));
  } else {
    scorer = std::make_shared<RemoteScorer>(*config.remote);
  }
  return Engine(std::move(normalizer), std::move(lexicon), std::move(table), std::move(scorer), config.detector,
                config.index_cache);
}

SentenceResult Engine::check_sentence(const Sentence& sentence, std::size_t sentence_id,
                                      const DetectorConfig& config) const {
  config.validate();
  SentenceResult r;
  r.sentence_id = sentence_id;
  r.sentence = sentence;
  try {
    r.detection = detect_nonword(sentence, lexicon());
    if (r.detection) {
      r.correction = correct_nonword(sentence, *r.detection, index_, *scorer_, config, table_);
    } else {
      r.detection = detect_realword(sentence, index_, *scorer_, config);
      if (r.detection) r.correction = correct_realword(sentence, *r.detection, config, table_);
    }
  } catch (const NoCorrectionError& e) {
    r.error = SentenceError{"no_correction", e.what()};
  } catch (const ScorerTransportError& e) {
    r.error = SentenceError{"scorer_unavailable", e.what()};
  } catch (const ScorerStatusError& e) {
    r.error = SentenceError{"scorer_unavailable", e.what()};
  } catch (const ScorerError& e) {
    r.error = SentenceError{"scorer_protocol", e.what()};
  }
  r.corrected_text = r.correction ? apply_correction(sentence.text, sentence, *r.correction, sentence.span.begin)
                                  : sentence.text;
  return r;
}

CheckResponse Engine::assemble(std::string normalized, std::vector<Sentence> sentences,
                               const DetectorConfig& config) const {
  CheckResponse out;
  std::vector<std::pair<Span, std::string>> edits;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    SentenceResult r = check_sentence(sentences[i], i, config);
    if (r.correction) edits.emplace_back(r.sentence.tokens[r.correction->token_index].span, r.correction->replacement);
    out.sentences.push_back(std::move(r));
  }
  out.corrected_text = splice(normalized, std::move(edits));
  out.normalized_text = std::move(normalized);
  return out;
}

CheckResponse Engine::check(std::string_view raw_text, const DetectorConfig& config) const {
  NormalizedText normalized = normalize(raw_text, normalizer_);
  auto sentences = segment_sentences(normalized.content);
  return assemble(std::move(normalized.content), std::move(sentences), config);
}

CheckResponse Engine::check_lines(std::string_view raw_text, const DetectorConfig& config) const {
  NormalizedText normalized = normalize(raw_text, normalizer_);
  const std::string_view text = normalized.content;
  std::vector<Sentence> sentences;
  std::size_t at = 0;
  while (at < text.size()) {
    std::size_t end = text.find('\n', at);
    if (end == std::string_view::npos) end = text.size();
    std::size_t body_end = end;
    if (body_end > at && text[body_end - 1] == '\r') --body_end;
    sentences.push_back(make_sentence(text.substr(at, body_end - at), at));
    at = end + 1;
  }
  return assemble(std::move(normalized.content), std::move(sentences), config);
}

std::string Engine::apply(std::string_view raw_text, const std::vector<AcceptedCorrection>& accepted) const {
  const NormalizedText normalized = normalize(raw_text, normalizer_);
  const auto sentences = segment_sentences(normalized.content);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<Span, std::string>> edits;
  for (const auto& a : accepted) {
    const std::string where =
        "sentence " + std::to_string(a.sentence_id) + ", token " + std::to_string(a.token_index);
    if (a.sentence_id >= sentences.size()) throw InputError(where + ": no such sentence");
    const auto& tokens = sentences[a.sentence_id].tokens;
    if (a.token_index >= tokens.size()) throw InputError(where + ": no such token");
    if (tokens[a.token_index].surface != a.original)
      throw InputError(where + ": expected '" + a.original + "', found '" + tokens[a.token_index].surface + "'");
    if (a.replacement.empty()) throw InputError(where + ": empty replacement");
    if (!seen.emplace(a.sentence_id, a.token_index).second) throw InputError(where + ": corrected twice");
    edits.emplace_back(tokens[a.token_index].span, a.replacement);
  }
  return splice(normalized.content, std::move(edits));
}

}  // namespace spellkit
