// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spellkit/candidate_index.hpp"
#include "spellkit/detector.hpp"
#include "spellkit/perto.hpp"
#include "spellkit/scorer.hpp"

namespace spellkit {

struct Correction {
  std::size_t token_index = 0;
  std::string original;
  std::string replacement;
  /// Selection order: replacement first. At most top_k entries, each with
  /// contextual_score and perto_match filled.
  std::vector<Candidate> ranked_candidates;
  /// The PERTO gate retained at least one candidate and picked the replacement.
  bool used_perto = false;
};

/// Ranks scored candidates for `error_word`:
///  1. keep the top_k by score (ties: smaller distance, then word);
///  2. PERTO gate: keep substitution-type candidates whose code equals the
///     error's code and, when `original_score` is given, whose score exceeds it;
///  3. select the best gated candidate, or the best of the top_k when the gate
///     is empty or disabled.
/// Throws NoCorrectionError for an empty candidate list.
Correction rank_and_select(std::string_view error_word, const ScoreDistribution& scores,
                           const std::vector<Candidate>& candidates, const DetectorConfig& config,
                           const PertoTable& table = PertoTable::standard(),
                           std::optional<double> original_score = std::nullopt);

/// Generates candidates for the non-word, scores them in context and ranks.
/// Throws NoCorrectionError when nothing lies within max_dist.
Correction correct_nonword(const Sentence& sentence, const Detection& detection,
                           const CandidateIndex& index, const ContextScorer& scorer,
                           const DetectorConfig& config,
                           const PertoTable& table = PertoTable::standard());

/// Ranks the evidence gathered at detection time; retained candidates must
/// outscore the original word by the detection margin.
Correction correct_realword(const Sentence& sentence, const Detection& detection,
                            const DetectorConfig& config,
                            const PertoTable& table = PertoTable::standard());

/// `text` with the corrected token spliced in. Token spans must index `text`
/// shifted by `base_offset`.
std::string apply_correction(std::string_view text, const Sentence& sentence,
                             const Correction& correction, std::size_t base_offset = 0);

}  // namespace spellkit
