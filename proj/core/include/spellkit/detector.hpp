// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spellkit/candidate_index.hpp"
#include "spellkit/editops.hpp"
#include "spellkit/lexicon.hpp"
#include "spellkit/normalizer.hpp"
#include "spellkit/scorer.hpp"

namespace spellkit {

struct DetectorConfig {
  std::size_t max_dist = 2;
  /// A real-word detection needs candidate score > original score * margin.
  double margin = 1.0;
  /// Candidates kept by contextual score before the PERTO gate.
  std::size_t top_k = 10;
  /// PERTO gate in the correction stage.
  bool use_perto = true;

  void validate() const;
};

enum class ErrorClass { NonWord, RealWord };

std::string_view to_string(ErrorClass c) noexcept;
ErrorClass parse_error_class(std::string_view name);

/// Scores observed when a real-word error was flagged; correction reuses them.
struct RealWordEvidence {
  std::string candidate;
  double candidate_score = 0.0;
  double original_score = 0.0;
  std::vector<Candidate> candidates;
  ScoreDistribution scores;
};

struct Detection {
  std::size_t token_index = 0;
  ErrorClass error_class = ErrorClass::NonWord;
  std::optional<RealWordEvidence> evidence;  // RealWord only
};

/// Leftmost Word-kind token missing from the lexicon.
std::optional<Detection> detect_nonword(const Sentence& sentence, const Lexicon& lexicon);

/// Masks each Word-kind token left to right and stops at the first one for
/// which some lexicon candidate outscores it by more than `margin`. Scorer
/// errors propagate.
std::optional<Detection> detect_realword(const Sentence& sentence, const CandidateIndex& index,
                                         const ContextScorer& scorer, const DetectorConfig& config);

/// Surfaces of every token, for building masked queries.
std::vector<std::string> token_surfaces(const Sentence& sentence);

}  // namespace spellkit
