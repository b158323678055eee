// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "spellkit/detector.hpp"
#include "spellkit/evalharness.hpp"
#include "spellkit/fourgram.hpp"
#include "spellkit/report.hpp"
#include "spellkit/synthetic.hpp"

namespace spellkit {

struct DeskBenchmarkSpec {
  SyntheticCorpusSpec corpus;
  std::size_t train_sentences = 20'000;
  std::size_t test_sentences = 20'000;
  std::uint64_t train_seed = 11;
  std::uint64_t test_seed = 12;
  InjectionSpec injection = InjectionSpec::defaults();
  /// The four-gram is close to certain inside slot contexts, so margin 1 flags
  /// every alternation between slot siblings; 100 is the desk operating point.
  DetectorConfig detector{.margin = 100.0};
  FourGramWeights weights;
};

struct DeskBenchmarkResult {
  Report report;
  /// "<configuration>/<task>" and "<configuration>/<task>/substitution" -> metrics
  std::map<std::string, Metrics> metrics;
  std::size_t injected_non_word = 0;
  std::size_t injected_real_word = 0;
  std::size_t skipped = 0;
};

/// Trains the built-in four-gram scorer on a clean synthetic split, injects
/// errors into a held-out split and runs the full pipeline with PERTO off and
/// on, evaluating every task.
DeskBenchmarkResult run_desk_benchmark(const DeskBenchmarkSpec& spec);

}  // namespace spellkit
