// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/detector.hpp"

#include <cmath>

#include "spellkit/errors.hpp"

namespace spellkit {

void DetectorConfig::validate() const {
  if (max_dist < 1 || max_dist > kMaxEditDistance) throw ConfigError("max_dist must be 1 or 2");
  if (!(margin >= 1.0) || !std::isfinite(margin)) throw ConfigError("margin must be a finite ratio >= 1");
  if (top_k == 0) throw ConfigError("top_k must be positive");
}

std::string_view to_string(ErrorClass c) noexcept {
  return c == ErrorClass::NonWord ? "non_word" : "real_word";
}

ErrorClass parse_error_class(std::string_view name) {
  if (name == "non_word") return ErrorClass::NonWord;
  if (name == "real_word") return ErrorClass::RealWord;
  throw InputError("unknown error class '" + std::string(name) + "'");
}

std::vector<std::string> token_surfaces(const Sentence& sentence) {
  std::vector<std::string> out;
  out.reserve(sentence.tokens.size());
  for (const auto& t : sentence.tokens) out.push_back(t.surface);
  return out;
}

std::optional<Detection> detect_nonword(const Sentence& sentence, const Lexicon& lexicon) {
  for (const auto& token : sentence.tokens) {
    if (token.is_word() && !lexicon.contains(token.surface)) {
      return Detection{token.index, ErrorClass::NonWord, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<Detection> detect_realword(const Sentence& sentence, const CandidateIndex& index,
                                         const ContextScorer& scorer, const DetectorConfig& config) {
  config.validate();
  const auto surfaces = token_surfaces(sentence);
  for (const auto& token : sentence.tokens) {
    if (!token.is_word()) continue;
    auto candidates = index.generate(token.surface, config.max_dist);
    if (candidates.empty()) continue;

    MaskedQuery query{surfaces, token.index, {}};
    query.vocabulary.reserve(candidates.size() + 1);
    for (const auto& c : candidates) query.vocabulary.push_back(c.word);
    query.vocabulary.push_back(token.surface);
    ScoreDistribution scores = scorer.score(query);

    const double original = scores.at(token.surface);
    const Candidate* best = nullptr;
    double best_score = 0.0;
    for (const auto& c : candidates) {
      const double s = scores.at(c.word);
      // candidates arrive ordered by (distance, word), so strict > keeps the tie-break
      if (!best || s > best_score) {
        best = &c;
        best_score = s;
      }
    }
    if (best_score > original * config.margin) {
      for (auto& c : candidates) c.contextual_score = scores.at(c.word);
      RealWordEvidence evidence{best->word, best_score, original, std::move(candidates), std::move(scores)};
      return Detection{token.index, ErrorClass::RealWord, std::move(evidence)};
    }
  }
  return std::nullopt;
}

}  // namespace spellkit
