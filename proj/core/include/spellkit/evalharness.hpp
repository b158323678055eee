// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spellkit/candidate_index.hpp"
#include "spellkit/detector.hpp"
#include "spellkit/editops.hpp"
#include "spellkit/perto.hpp"

namespace spellkit {

/// Order of the proportion arrays below.
inline constexpr std::array<EditType, 4> kInjectableEditTypes{
    EditType::Substitution, EditType::Insertion, EditType::Deletion, EditType::Transposition};

struct ClassInjection {
  /// Errors per 10,000 sentences.
  double rate_per_10k = 0.0;
  /// Substitution, insertion, deletion, transposition.
  std::array<double, 4> type_mix{};
  /// Edit distance 1, 2.
  std::array<double, 2> distance_mix{};
};

struct InjectionSpec {
  ClassInjection non_word;
  ClassInjection real_word;
  /// Probability that an injected substitution uses a character of the same
  /// PERTO group as the one it replaces.
  double confusable_substitution_rate = 0.9;
  /// Attempts per sentence before the error is skipped.
  std::size_t max_attempts = 50;
  std::uint64_t seed = 1;

  /// 120 / 29 errors per 10k sentences, type mix from the measured non-word and
  /// real-word distributions, distance mix with 3+ dropped and renormalized.
  static InjectionSpec defaults();
  static InjectionSpec from_json(std::string_view json_text);
  static InjectionSpec load(const std::filesystem::path& path);
  std::string to_json() const;

  /// Renormalizes the mixes to sum to 1; throws ConfigError for negative
  /// values, all-zero mixes or combined rates above 10,000.
  void normalize_and_validate();
};

struct GoldRecord {
  std::size_t sentence_id = 0;
  std::size_t token_index = 0;
  std::string original;
  std::string corrupted;
  ErrorClass error_class = ErrorClass::NonWord;
  EditType edit_type = EditType::Substitution;
  std::size_t distance = 1;

  std::string to_json() const;
  static GoldRecord from_json(std::string_view line);
  bool operator==(const GoldRecord&) const = default;
};

struct InjectionResult {
  std::vector<std::string> corpus;  // corrupted sentences, same order
  std::vector<GoldRecord> gold;
  std::vector<std::string> warnings;  // one per skipped error
};

/// Injects at most one error per sentence. Sentences must be normalized. Each
/// error's class, edit type and distance are drawn from `spec`; non-word forms
/// are rejected when they fall inside the lexicon, real-word forms are drawn
/// among lexicon neighbours of the requested type and distance.
InjectionResult inject_errors(const std::vector<std::string>& corpus, const InjectionSpec& spec,
                              const CandidateIndex& index,
                              const PertoTable& table = PertoTable::standard());

enum class EvalTask { NonWordDetection, NonWordCorrection, RealWordDetection, RealWordCorrection };

std::string_view to_string(EvalTask task) noexcept;
EvalTask parse_eval_task(std::string_view name);

/// One system decision for a sentence.
struct Prediction {
  std::size_t sentence_id = 0;
  std::size_t token_index = 0;
  ErrorClass error_class = ErrorClass::NonWord;
  std::optional<std::string> replacement;
};

struct Metrics {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static Metrics from_counts(std::size_t tp, std::size_t fp, std::size_t fn);
};

/// Harmonic mean of precision and recall; 0 when both are 0.
double f1_score(double precision, double recall) noexcept;

/// Restricts the evaluation to sentences whose gold error has this edit type.
struct EvalFilter {
  std::optional<EditType> edit_type;
};

/// Detection tasks match on token position; correction tasks also require
/// the replacement to equal the gold original. Throws InputError on duplicate
/// sentence ids in either input.
Metrics evaluate(const std::vector<Prediction>& predictions, const std::vector<GoldRecord>& gold,
                 EvalTask task, const EvalFilter& filter = {});

/// Reads the JSON lines emitted by `spellkit check` / `spellkit correct`.
std::vector<Prediction> parse_predictions(std::string_view jsonl);
std::vector<GoldRecord> parse_gold(std::string_view jsonl);

}  // namespace spellkit
