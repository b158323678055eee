// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace spellkit {

/// A sentence with one position under evaluation and the words to score there.
struct MaskedQuery {
  std::vector<std::string> tokens;
  std::size_t mask_index = 0;
  /// Candidates plus the original word; non-empty, no duplicates.
  std::vector<std::string> vocabulary;

  /// Throws ContractError when an invariant does not hold.
  void validate() const;
};

/// word -> probability, normalized to sum to 1 over the requested words.
class ScoreDistribution {
 public:
  ScoreDistribution() = default;

  /// Renormalizes non-negative raw weights over `vocabulary`. Every vocabulary
  /// word must have a weight (MissingWordError otherwise). A zero total yields
  /// the uniform distribution.
  static ScoreDistribution normalized(const std::map<std::string, double, std::less<>>& raw,
                                      const std::vector<std::string>& vocabulary);

  /// Throws ContractError for a word that was not requested.
  double at(std::string_view word) const;
  bool contains(std::string_view word) const { return scores_.find(word) != scores_.end(); }
  std::size_t size() const noexcept { return scores_.size(); }
  const std::map<std::string, double, std::less<>>& scores() const noexcept { return scores_; }

  bool operator==(const ScoreDistribution&) const = default;

 private:
  std::map<std::string, double, std::less<>> scores_;
};

struct ScorerHealth {
  bool ok = true;
  std::string detail;
};

/// Contextual scorer: probability of each vocabulary word at the masked
/// position given the rest of the sentence. Implementations never look at
/// tokens[mask_index], are deterministic for a fixed model and are safe to call
/// concurrently.
class ContextScorer {
 public:
  virtual ~ContextScorer() = default;

  virtual ScoreDistribution score(const MaskedQuery& query) const = 0;
  /// Short backend identifier ("fourgram", "remote", ...).
  virtual std::string backend() const = 0;
  virtual ScorerHealth health() const { return {}; }
};

}  // namespace spellkit
