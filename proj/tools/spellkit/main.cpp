// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "commands.hpp"
#include "spellkit/errors.hpp"

namespace {

using namespace spellkit::cli;

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : std::move(fallback);
}

void add_engine_flags(CLI::App* cmd, EngineFlags& f, bool scorer) {
  cmd->add_option("--lexicon", f.lexicons, "Word list (repeatable; replaces the configured lexicons)");
  cmd->add_option("--normalizer", f.normalizer, "Normalizer rule file");
  cmd->add_option("--perto-table", f.perto_table, "PERTO group table");
  cmd->add_option("--max-dist", f.max_dist, "Candidate edit distance bound (1 or 2)");
  if (scorer) {
    cmd->add_option("--model", f.model, "Four-gram model file");
    cmd->add_option("--endpoint", f.endpoint, "Remote scorer URL");
    cmd->add_option("--margin", f.margin, "Real-word detection margin (>= 1)");
    cmd->add_option("--top-k", f.top_k, "Candidates kept before the PERTO gate");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persian clinical spelling detection and correction"};
  app.require_subcommand(1);
  app.fallthrough();

  EngineFlags flags;
  std::string log_level = "warn";
  app.add_option("--config", flags.config, "Engine config file (env SPELLKIT_CONFIG)");
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  int code = kOk;
  std::function<int()> action;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normalize stdin to stdout");
  std::string normalize_config;
  bool print_config = false;
  normalize_cmd->add_option("--config", normalize_config, "Normalizer rule file");
  normalize_cmd->add_flag("--print-config", print_config, "Print the effective rules as JSON");
  normalize_cmd->callback([&] { action = [&] { return run_normalize(normalize_config, flags.config, print_config); }; });

  auto* lexicon_cmd = app.add_subcommand("lexicon", "Build or merge word lists");
  lexicon_cmd->require_subcommand(1);
  auto* build_cmd = lexicon_cmd->add_subcommand("build", "Extract a word list from a corpus");
  std::string from_corpus, out, normalizer;
  build_cmd->add_option("--from-corpus", from_corpus)->required();
  build_cmd->add_option("--out", out)->required();
  build_cmd->add_option("--normalizer", normalizer);
  build_cmd->callback([&] { action = [&] { return run_lexicon_build(from_corpus, out, normalizer); }; });
  auto* merge_cmd = lexicon_cmd->add_subcommand("merge", "Union of word lists");
  std::vector<std::string> merge_inputs;
  merge_cmd->add_option("inputs", merge_inputs)->required()->expected(2, -1);
  merge_cmd->add_option("--out", out)->required();
  merge_cmd->callback([&] { action = [&] { return run_lexicon_merge(merge_inputs, out); }; });

  auto* candidates_cmd = app.add_subcommand("candidates", "Lexicon words near WORD");
  std::string word;
  candidates_cmd->add_option("word", word)->required();
  add_engine_flags(candidates_cmd, flags, false);
  candidates_cmd->callback([&] { action = [&] { return run_candidates(word, flags); }; });

  auto* perto_cmd = app.add_subcommand("perto", "PERTO codes of words");
  std::vector<std::string> perto_words;
  std::string perto_table;
  bool print_table = false;
  perto_cmd->add_option("words", perto_words);
  perto_cmd->add_option("--table", perto_table);
  perto_cmd->add_flag("--print-table", print_table, "Print the effective table as JSON");
  perto_cmd->callback([&] { action = [&] { return run_perto(perto_words, perto_table, print_table); }; });

  auto* train_cmd = app.add_subcommand("train-fourgram", "Train the built-in four-gram scorer");
  std::string train_corpus;
  std::vector<double> weights;
  std::optional<double> smoothing;
  train_cmd->add_option("--corpus", train_corpus)->required();
  train_cmd->add_option("--out", out)->required();
  train_cmd->add_option("--weights", weights, "Interpolation weights, unigram first")->delimiter(',');
  train_cmd->add_option("--smoothing", smoothing, "Add-k constant");
  train_cmd->add_option("--normalizer", normalizer);
  train_cmd->callback([&] {
    action = [&] { return run_train_fourgram(train_corpus, out, weights, smoothing, normalizer); };
  });

  auto* score_cmd = app.add_subcommand("score", "Score candidates at a masked position");
  std::string sentence;
  std::size_t mask = 0;
  std::vector<std::string> score_candidates;
  score_cmd->add_option("--model", flags.model);
  score_cmd->add_option("--endpoint", flags.endpoint);
  score_cmd->add_option("--sentence", sentence)->required();
  score_cmd->add_option("--mask", mask)->required();
  score_cmd->add_option("--candidates", score_candidates)->required()->delimiter(',');
  score_cmd->callback([&] { action = [&] { return run_score(flags, sentence, mask, score_candidates); }; });

  bool per_line = false;
  auto* check_cmd = app.add_subcommand("check", "Detect errors in stdin, one JSON record per sentence");
  add_engine_flags(check_cmd, flags, true);
  check_cmd->add_flag("--per-line", per_line, "Treat every input line as one sentence");
  check_cmd->callback([&] { action = [&] { return run_check(flags, false, per_line); }; });

  auto* correct_cmd = app.add_subcommand("correct", "Detect and correct errors in stdin");
  add_engine_flags(correct_cmd, flags, true);
  correct_cmd->add_flag("--per-line", per_line, "Treat every input line as one sentence");
  correct_cmd->add_option("--perto", flags.perto, "PERTO gate")->check(CLI::IsMember({"on", "off"}));
  correct_cmd->callback([&] { action = [&] { return run_check(flags, true, per_line); }; });

  auto* inject_cmd = app.add_subcommand("inject", "Inject synthetic errors into a corpus");
  std::string spec, corpus, out_corpus, out_gold;
  std::optional<std::uint64_t> seed;
  inject_cmd->add_option("--spec", spec, "Injection spec (defaults when omitted)");
  inject_cmd->add_option("--corpus", corpus)->required();
  inject_cmd->add_option("--out-corpus", out_corpus)->required();
  inject_cmd->add_option("--out-gold", out_gold)->required();
  inject_cmd->add_option("--seed", seed);
  add_engine_flags(inject_cmd, flags, false);
  inject_cmd->callback([&] {
    action = [&] { return run_inject(spec, corpus, out_corpus, out_gold, seed, flags); };
  });

  auto* eval_cmd = app.add_subcommand("eval", "Score predictions against gold records");
  std::string gold, pred, task, edit_type, format = "text";
  eval_cmd->add_option("--gold", gold)->required();
  eval_cmd->add_option("--pred", pred)->required();
  eval_cmd->add_option("--task", task)
      ->required()
      ->check(CLI::IsMember(
          {"non_word_detection", "non_word_correction", "real_word_detection", "real_word_correction"}));
  eval_cmd->add_option("--edit-type", edit_type, "Restrict to gold errors of this edit type");
  eval_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  eval_cmd->callback([&] { action = [&] { return run_eval(gold, pred, task, edit_type, format); }; });

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  std::string bind = env_or("SPELLKIT_BIND", "127.0.0.1:8080");
  serve_cmd->add_option("--bind", bind, "host:port (env SPELLKIT_BIND)");
  add_engine_flags(serve_cmd, flags, true);
  serve_cmd->callback([&] { action = [&] { return run_serve(flags, bind); }; });

  auto* bench_cmd = app.add_subcommand("bench", "Desk-scale benchmark on the synthetic corpus");
  std::size_t train = 20'000, test = 20'000;
  std::optional<double> non_word_rate, real_word_rate;
  bench_cmd->add_option("--train", train);
  bench_cmd->add_option("--test", test);
  bench_cmd->add_option("--non-word-rate", non_word_rate, "Non-word errors per 10,000 sentences");
  bench_cmd->add_option("--real-word-rate", real_word_rate, "Real-word errors per 10,000 sentences");
  bench_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  bench_cmd->callback([&] {
    action = [&] { return run_bench(train, test, non_word_rate, real_word_rate, format); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  auto logger = spdlog::stderr_color_mt("spellkit");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(log_level));
  if (flags.config.empty()) flags.config = env_or("SPELLKIT_CONFIG", "");

  try {
    code = action();
  } catch (const spellkit::ConfigError& e) {
    spdlog::error("{}", e.what());
    code = kConfig;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    code = kRuntime;
  }
  return code;
}
