// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spellkit/lexicon.hpp"
#include "spellkit/perto.hpp"

namespace spellkit {

struct SyntheticCorpusSpec {
  std::uint64_t seed = 7;
  std::size_t base_words = 400;
  std::size_t patterns = 60;
  std::size_t min_sentence_length = 4;
  std::size_t max_sentence_length = 9;
  /// Chance that a slot pool also holds a close sibling of one of its words.
  double sibling_rate = 0.6;
};

/// Desk-scale stand-in for a clinical corpus: sentences are drawn from a fixed
/// set of slot patterns, so context is informative, and the lexicon holds
/// every corpus word plus edit-distance-1 and -2 neighbours of each type.
class SyntheticCorpus {
 public:
  explicit SyntheticCorpus(const SyntheticCorpusSpec& spec,
                           const PertoTable& table = PertoTable::standard());

  /// Deterministic for a fixed (spec, seed); each sentence ends with '.'.
  std::vector<std::string> sentences(std::size_t count, std::uint64_t seed) const;
  const Lexicon& lexicon() const noexcept { return lexicon_; }
  const std::vector<std::string>& corpus_words() const noexcept { return corpus_words_; }

 private:
  struct Pattern {
    std::vector<std::vector<std::size_t>> slots;  // word ids per slot
    double weight;
  };

  SyntheticCorpusSpec spec_;
  std::vector<std::string> corpus_words_;
  std::vector<Pattern> patterns_;
  Lexicon lexicon_;
};

}  // namespace spellkit
