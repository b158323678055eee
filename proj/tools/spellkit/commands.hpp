// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spellkit/detector.hpp"

namespace spellkit::cli {

enum ExitCode { kOk = 0, kUsage = 1, kConfig = 2, kRuntime = 3 };

/// Engine settings from --config / SPELLKIT_CONFIG, overridden by flags.
struct EngineFlags {
  std::string config;
  std::vector<std::string> lexicons;
  std::string model;
  std::string endpoint;
  std::string normalizer;
  std::string perto_table;
  std::optional<std::size_t> max_dist;
  std::optional<double> margin;
  std::optional<std::size_t> top_k;
  std::string perto;  // "on", "off" or empty
};

int run_normalize(const std::string& config_path, const std::string& engine_config, bool print_config);
int run_lexicon_build(const std::string& corpus, const std::string& out, const std::string& normalizer);
int run_lexicon_merge(const std::vector<std::string>& inputs, const std::string& out);
int run_candidates(const std::string& word, const EngineFlags& flags);
int run_perto(const std::vector<std::string>& words, const std::string& table, bool print_table);
int run_train_fourgram(const std::string& corpus, const std::string& out, const std::vector<double>& weights,
                       std::optional<double> smoothing, const std::string& normalizer);
int run_score(const EngineFlags& flags, const std::string& sentence, std::size_t mask,
              const std::vector<std::string>& candidates);
int run_check(const EngineFlags& flags, bool correct, bool per_line);
int run_inject(const std::string& spec, const std::string& corpus, const std::string& out_corpus,
               const std::string& out_gold, std::optional<std::uint64_t> seed, const EngineFlags& flags);
int run_eval(const std::string& gold, const std::string& pred, const std::string& task,
             const std::string& edit_type, const std::string& format);
int run_serve(const EngineFlags& flags, const std::string& bind);
int run_bench(std::size_t train, std::size_t test, std::optional<double> non_word_rate,
              std::optional<double> real_word_rate, const std::string& format);

}  // namespace spellkit::cli
