// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/corrector.hpp"

#include <algorithm>

#include "spellkit/errors.hpp"

namespace spellkit {

Correction rank_and_select(std::string_view error_word, const ScoreDistribution& scores,
                           const std::vector<Candidate>& candidates, const DetectorConfig& config,
                           const PertoTable& table, std::optional<double> original_score) {
  if (candidates.empty())
    throw NoCorrectionError("no candidates within edit distance for '" + std::string(error_word) + "'");

  std::vector<Candidate> ranked = candidates;
  for (auto& c : ranked) {
    if (!scores.contains(c.word)) throw ContractError("candidate '" + c.word + "' was not scored");
    c.contextual_score = scores.at(c.word);
    c.perto_match = perto_match(std::string_view(c.word), error_word, table);
  }
  const auto by_score = [](const Candidate& a, const Candidate& b) {
    if (*a.contextual_score != *b.contextual_score) return *a.contextual_score > *b.contextual_score;
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.word < b.word;
  };
  std::sort(ranked.begin(), ranked.end(), by_score);
  if (ranked.size() > config.top_k) ranked.resize(config.top_k);

  const auto gated = [&](const Candidate& c) {
    return config.use_perto && c.edit_type == EditType::Substitution && *c.perto_match &&
           (!original_score || *c.contextual_score > *original_score);
  };
  // stable: within each group the score order is kept
  std::stable_partition(ranked.begin(), ranked.end(), gated);

  Correction out;
  out.original = std::string(error_word);
  out.used_perto = gated(ranked.front());
  out.replacement = ranked.front().word;
  out.ranked_candidates = std::move(ranked);
  return out;
}

Correction correct_nonword(const Sentence& sentence, const Detection& detection,
                           const CandidateIndex& index, const ContextScorer& scorer,
                           const DetectorConfig& config, const PertoTable& table) {
  config.validate();
  if (detection.token_index >= sentence.tokens.size())
    throw ContractError("detection index outside the sentence");
  const auto& token = sentence.tokens[detection.token_index];
  auto candidates = index.generate(token.surface, config.max_dist);
  if (candidates.empty())
    throw NoCorrectionError("no candidates within edit distance for '" + token.surface + "'");

  MaskedQuery query{token_surfaces(sentence), token.index, {}};
  for (const auto& c : candidates) query.vocabulary.push_back(c.word);
  const ScoreDistribution scores = scorer.score(query);

  Correction out = rank_and_select(token.surface, scores, candidates, config, table);
  out.token_index = token.index;
  return out;
}

Correction correct_realword(const Sentence& sentence, const Detection& detection,
                            const DetectorConfig& config, const PertoTable& table) {
  config.validate();
  if (detection.token_index >= sentence.tokens.size())
    throw ContractError("detection index outside the sentence");
  if (detection.error_class != ErrorClass::RealWord || !detection.evidence)
    throw ContractError("real-word correction needs a real-word detection with evidence");
  const auto& token = sentence.tokens[detection.token_index];
  const auto& ev = *detection.evidence;
  Correction out =
      rank_and_select(token.surface, ev.scores, ev.candidates, config, table, ev.original_score * config.margin);
  out.token_index = token.index;
  return out;
}

std::string apply_correction(std::string_view text, const Sentence& sentence,
                             const Correction& correction, std::size_t base_offset) {
  if (correction.token_index >= sentence.tokens.size())
    throw ContractError("correction index outside the sentence");
  const auto& token = sentence.tokens[correction.token_index];
  if (token.surface != correction.original)
    throw ContractError("correction does not match the token at its index");
  if (token.span.begin < base_offset || token.span.end - base_offset > text.size())
    throw ContractError("token span outside the text");
  std::string out;
  out.reserve(text.size() + correction.replacement.size());
  out.append(text.substr(0, token.span.begin - base_offset));
  out.append(correction.replacement);
  out.append(text.substr(token.span.end - base_offset));
  return out;
}

}  // namespace spellkit
