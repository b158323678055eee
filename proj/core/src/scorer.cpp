// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/scorer.hpp"

#include <cmath>
#include <set>

#include "spellkit/errors.hpp"

namespace spellkit {

void MaskedQuery::validate() const {
  if (mask_index >= tokens.size())
    throw ContractError("mask_index " + std::to_string(mask_index) + " outside a sentence of " +
                        std::to_string(tokens.size()) + " tokens");
  if (vocabulary.empty()) throw ContractError("masked query without vocabulary");
  std::set<std::string_view> seen;
  for (const auto& w : vocabulary)
    if (!seen.insert(w).second) throw ContractError("duplicate vocabulary word '" + w + "'");
}

ScoreDistribution ScoreDistribution::normalized(
    const std::map<std::string, double, std::less<>>& raw, const std::vector<std::string>& vocabulary) {
  ScoreDistribution dist;
  double total = 0.0;
  for (const auto& word : vocabulary) {
    const auto it = raw.find(word);
    if (it == raw.end()) throw MissingWordError("no score for '" + word + "'", word);
    if (!std::isfinite(it->second) || it->second < 0.0)
      throw ContractError("score for '" + word + "' is not a non-negative number");
    dist.scores_[word] = it->second;
    total += it->second;
  }
  for (auto& [word, value] : dist.scores_)
    value = total > 0.0 ? value / total : 1.0 / static_cast<double>(dist.scores_.size());
  return dist;
}

double ScoreDistribution::at(std::string_view word) const {
  const auto it = scores_.find(word);
  if (it == scores_.end()) throw ContractError("word '" + std::string(word) + "' was not scored");
  return it->second;
}

}  // namespace spellkit
