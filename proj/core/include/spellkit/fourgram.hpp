// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spellkit/scorer.hpp"

namespace spellkit {

/// Interpolation coefficients, index 0 = unigram ... index 3 = four-gram.
struct FourGramWeights {
  std::array<double, 4> by_order{0.1, 0.2, 0.3, 0.4};
  double smoothing = 0.01;  // add-k constant

  void validate() const;
  bool operator==(const FourGramWeights&) const = default;
};

/// Weighted bidirectional four-gram language model. For a masked position the
/// forward direction conditions on up to three preceding tokens and the
/// backward direction on up to three following tokens; each direction
/// interpolates add-k smoothed relative frequencies of orders 1-4 and the two
/// directions are averaged.
class FourGramModel final : public ContextScorer {
 public:
  enum class Direction { Forward = 0, Backward = 1 };

  static constexpr std::string_view kBeginMarker = "<s>";
  static constexpr std::string_view kEndMarker = "</s>";

  FourGramModel() = default;

  /// Throws InputError for an empty corpus.
  static FourGramModel train(const std::vector<std::vector<std::string>>& sentences,
                             const FourGramWeights& weights = {});

  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  /// Throws ConfigError on a malformed or wrong-version file.
  static FourGramModel load(std::istream& in);
  static FourGramModel load(const std::filesystem::path& path);

  ScoreDistribution score(const MaskedQuery& query) const override;
  std::string backend() const override { return "fourgram"; }

  /// Unnormalized interpolated probability of `word` following `context`
  /// (context in reading order of the direction: for Backward, nearest token last).
  double directional_probability(Direction direction, const std::vector<std::string>& context,
                                 std::string_view word) const;
  /// Average of both directions for `word` at `position` of `tokens`.
  double raw_score(const std::vector<std::string>& tokens, std::size_t position,
                   std::string_view word) const;

  /// Count of an n-gram given in direction order (context..., target).
  std::uint64_t count(Direction direction, const std::vector<std::string>& ngram) const;

  const FourGramWeights& weights() const noexcept { return weights_; }
  std::size_t vocabulary_size() const noexcept { return vocabulary_size_; }
  std::uint64_t token_count() const noexcept { return token_count_; }

  friend bool operator==(const FourGramModel& a, const FourGramModel& b);

 private:
  using Table = std::unordered_map<std::string, std::uint64_t>;

  void rebuild_context_counts();

  FourGramWeights weights_;
  std::size_t vocabulary_size_ = 0;  // distinct training tokens
  std::uint64_t token_count_ = 0;
  // [direction][order-1]: n-gram key (space separated) -> count
  std::array<std::array<Table, 4>, 2> ngrams_;
  // [direction][order-1]: context key -> summed count; derived from ngrams_
  std::array<std::array<Table, 4>, 2> contexts_;
};

}  // namespace spellkit
