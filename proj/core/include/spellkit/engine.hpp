// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spellkit/candidate_index.hpp"
#include "spellkit/corrector.hpp"
#include "spellkit/detector.hpp"
#include "spellkit/lexicon.hpp"
#include "spellkit/normalizer.hpp"
#include "spellkit/perto.hpp"
#include "spellkit/remote_scorer.hpp"
#include "spellkit/scorer.hpp"

namespace spellkit {

/// Everything needed to stand up an engine. Relative paths in a config file
/// resolve against the file's directory.
struct EngineConfig {
  std::vector<std::filesystem::path> lexicons;
  std::optional<std::filesystem::path> fourgram_model;
  std::optional<RemoteScorerOptions> remote;
  std::optional<std::filesystem::path> normalizer_config;
  std::optional<std::filesystem::path> perto_table;
  std::optional<std::filesystem::path> index_cache;
  DetectorConfig detector;

  static EngineConfig load(const std::filesystem::path& path);
  static EngineConfig from_json(std::string_view json_text,
                                const std::filesystem::path& base_dir = {});
  /// Effective settings with credentials in URLs redacted.
  std::string to_redacted_json() const;
  /// Exactly one scorer backend, at least one lexicon. Throws ConfigError.
  void validate() const;
};

struct SentenceError {
  std::string code;  // "scorer_unavailable", "scorer_protocol", "no_correction"
  std::string message;
};

struct SentenceResult {
  std::size_t sentence_id = 0;
  Sentence sentence;  // token spans index CheckResponse::normalized_text
  std::optional<Detection> detection;
  std::optional<Correction> correction;
  std::optional<SentenceError> error;
  std::string corrected_text;
};

struct CheckResponse {
  std::string normalized_text;
  std::string corrected_text;
  std::vector<SentenceResult> sentences;

  bool scorer_failed() const;
  /// Service representation (pretty printed, keys sorted).
  std::string to_json() const;
};

/// One line of `spellkit check`: {"sentence_id", "detection"}.
std::string check_record_json(const SentenceResult& result);
/// One line of `spellkit correct`: {"sentence_id", "detection", "corrections", "corrected_text"}.
std::string correct_record_json(const SentenceResult& result);

struct AcceptedCorrection {
  std::size_t sentence_id = 0;
  std::size_t token_index = 0;
  std::string original;
  std::string replacement;
};

/// Staged pipeline: normalize, segment, tokenize, then per sentence non-word
/// detection and correction, falling back to real-word detection and
/// correction. Immutable after construction and safe to share across threads.
class Engine {
 public:
  Engine(NormalizationConfig normalizer, Lexicon lexicon, PertoTable table,
         std::shared_ptr<const ContextScorer> scorer, DetectorConfig defaults,
         std::optional<std::filesystem::path> index_cache = std::nullopt);

  static Engine from_config(const EngineConfig& config);

  CheckResponse check(std::string_view raw_text) const { return check(raw_text, defaults_); }
  CheckResponse check(std::string_view raw_text, const DetectorConfig& config) const;
  /// Every input line is one sentence; sentence ids are line numbers from 0.
  CheckResponse check_lines(std::string_view raw_text, const DetectorConfig& config) const;

  SentenceResult check_sentence(const Sentence& sentence, std::size_t sentence_id,
                                const DetectorConfig& config) const;

  /// Normalizes and segments `raw_text` exactly as check() does and splices in
  /// the accepted replacements. Throws InputError when a correction does not
  /// point at a token with the stated original surface.
  std::string apply(std::string_view raw_text, const std::vector<AcceptedCorrection>& accepted) const;

  const NormalizationConfig& normalizer() const noexcept { return normalizer_; }
  const CandidateIndex& index() const noexcept { return index_; }
  const Lexicon& lexicon() const noexcept { return index_.lexicon(); }
  const PertoTable& perto_table() const noexcept { return table_; }
  const ContextScorer& scorer() const noexcept { return *scorer_; }
  const DetectorConfig& defaults() const noexcept { return defaults_; }

 private:
  CheckResponse assemble(std::string normalized, std::vector<Sentence> sentences,
                         const DetectorConfig& config) const;

  NormalizationConfig normalizer_;
  CandidateIndex index_;
  PertoTable table_;
  std::shared_ptr<const ContextScorer> scorer_;
  DetectorConfig defaults_;
};

}  // namespace spellkit
