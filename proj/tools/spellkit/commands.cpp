// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "commands.hpp"

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "json.hpp"
#include <spdlog/spdlog.h>

#include "spellkit/desk_benchmark.hpp"
#include "spellkit/engine.hpp"
#include "spellkit/errors.hpp"
#include "spellkit/evalharness.hpp"
#include "spellkit/fourgram.hpp"
#include "spellkit/service.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit::cli {
namespace {

using nlohmann::json;

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return read_all(in);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

NormalizationConfig normalizer_from(const std::string& path) {
  return path.empty() ? NormalizationConfig::defaults() : NormalizationConfig::load(path);
}

EngineConfig engine_config(const EngineFlags& flags, bool need_scorer) {
  EngineConfig cfg;
  if (!flags.config.empty()) {
    cfg = EngineConfig::load(flags.config);
  }
  if (!flags.lexicons.empty()) cfg.lexicons.assign(flags.lexicons.begin(), flags.lexicons.end());
  if (!flags.model.empty()) {
    cfg.fourgram_model = flags.model;
    cfg.remote.reset();
  }
  if (!flags.endpoint.empty()) {
    cfg.remote = RemoteScorerOptions{flags.endpoint};
    cfg.fourgram_model.reset();
  }
  if (!flags.normalizer.empty()) cfg.normalizer_config = flags.normalizer;
  if (!flags.perto_table.empty()) cfg.perto_table = flags.perto_table;
  if (flags.max_dist) cfg.detector.max_dist = *flags.max_dist;
  if (flags.margin) cfg.detector.margin = *flags.margin;
  if (flags.top_k) cfg.detector.top_k = *flags.top_k;
  if (!flags.perto.empty()) cfg.detector.use_perto = flags.perto == "on";
  if (need_scorer) {
    cfg.validate();
  } else if (cfg.lexicons.empty()) {
    throw ConfigError("no lexicon given (use --lexicon or --config)");
  }
  return cfg;
}

Lexicon load_lexicons(const EngineConfig& cfg, const NormalizationConfig& normalizer) {
  Lexicon lexicon;
  for (const auto& path : cfg.lexicons) lexicon = merge(lexicon, Lexicon::load_file(path, normalizer));
  return lexicon;
}

std::shared_ptr<const ContextScorer> scorer_from(const EngineFlags& flags) {
  if (flags.model.empty() == flags.endpoint.empty()) {
    if (!flags.config.empty()) {
      const auto cfg = EngineConfig::load(flags.config);
      if (cfg.fourgram_model) return std::make_shared<FourGramModel>(FourGramModel::load(*cfg.fourgram_model));
      return std::make_shared<RemoteScorer>(*cfg.remote);
    }
    throw ConfigError("give exactly one of --model or --endpoint");
  }
  if (!flags.model.empty()) return std::make_shared<FourGramModel>(FourGramModel::load(flags.model));
  return std::make_shared<RemoteScorer>(RemoteScorerOptions{flags.endpoint});
}

std::pair<std::string, int> parse_bind(const std::string& bind) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw ConfigError("bind address must be host:port, got '" + bind + "'");
  int port = -1;
  try {
    port = std::stoi(bind.substr(colon + 1));
  } catch (const std::logic_error&) {
  }
  if (port < 0 || port > 65535) throw ConfigError("bad port in bind address '" + bind + "'");
  return {bind.substr(0, colon), port};
}

}  // namespace

int run_normalize(const std::string& config_path, const std::string& engine_config_path, bool print_config) {
  NormalizationConfig cfg = NormalizationConfig::defaults();
  if (!config_path.empty()) {
    cfg = NormalizationConfig::load(config_path);
  } else if (!engine_config_path.empty()) {
    const auto engine = EngineConfig::load(engine_config_path);
    if (engine.normalizer_config) cfg = NormalizationConfig::load(*engine.normalizer_config);
  }
  if (print_config) {
    std::cout << cfg.to_json() << '\n';
    return kOk;
  }
  const NormalizedText out = normalize(read_all(std::cin), cfg);
  std::cout << out.content;
  spdlog::debug("applied rules: {}", json(out.applied_rules).dump());
  return kOk;
}

int run_lexicon_build(const std::string& corpus, const std::string& out, const std::string& normalizer) {
  std::ifstream in(corpus, std::ios::binary);
  if (!in) throw InputError("cannot open " + corpus);
  const Lexicon lexicon = Lexicon::build_from_corpus(in, corpus, normalizer_from(normalizer));
  auto file = open_out(out);
  lexicon.save(file);
  spdlog::info("wrote {} entries to {}", lexicon.size(), out);
  return kOk;
}

int run_lexicon_merge(const std::vector<std::string>& inputs, const std::string& out) {
  const auto normalizer = NormalizationConfig::defaults();
  Lexicon lexicon;
  for (const auto& path : inputs) lexicon = merge(lexicon, Lexicon::load_file(path, normalizer));
  auto file = open_out(out);
  lexicon.save(file);
  spdlog::info("wrote {} entries to {}", lexicon.size(), out);
  return kOk;
}

int run_candidates(const std::string& word, const EngineFlags& flags) {
  const EngineConfig cfg = engine_config(flags, false);
  const auto normalizer =
      cfg.normalizer_config ? NormalizationConfig::load(*cfg.normalizer_config) : NormalizationConfig::defaults();
  const Lexicon lexicon = load_lexicons(cfg, normalizer);
  const CandidateIndex index = cfg.index_cache ? CandidateIndex::load_or_build(lexicon, *cfg.index_cache)
                                               : CandidateIndex(lexicon);
  cfg.detector.validate();
  const std::string query = normalize(word, normalizer).content;
  for (const auto& c : index.generate(query, cfg.detector.max_dist)) {
    std::cout << json{{"word", c.word}, {"distance", c.distance}, {"edit_type", to_string(c.edit_type)}}.dump()
              << '\n';
  }
  return kOk;
}

int run_perto(const std::vector<std::string>& words, const std::string& table_path, bool print_table) {
  const PertoTable table = table_path.empty() ? PertoTable::standard() : PertoTable::load(table_path);
  if (print_table) {
    std::cout << table.to_json() << '\n';
    return kOk;
  }
  const auto normalizer = NormalizationConfig::defaults();
  for (const auto& w : words) {
    const std::string word = normalize(w, normalizer).content;
    std::cout << word << '\t' << perto_code(std::string_view(word), table) << '\n';
  }
  return kOk;
}

int run_train_fourgram(const std::string& corpus, const std::string& out, const std::vector<double>& weights,
                       std::optional<double> smoothing, const std::string& normalizer) {
  FourGramWeights w;
  if (!weights.empty()) {
    if (weights.size() != 4) throw ConfigError("--weights needs four values (unigram..four-gram)");
    std::copy(weights.begin(), weights.end(), w.by_order.begin());
  }
  if (smoothing) w.smoothing = *smoothing;
  const NormalizedText text = normalize(read_file(corpus), normalizer_from(normalizer));
  std::vector<std::vector<std::string>> sentences;
  for (const auto& s : segment_sentences(text)) sentences.push_back(token_surfaces(s));
  const FourGramModel model = FourGramModel::train(sentences, w);
  model.save(std::filesystem::path(out));
  spdlog::info("trained on {} sentences, {} tokens, {} types", sentences.size(), model.token_count(),
               model.vocabulary_size());
  return kOk;
}

int run_score(const EngineFlags& flags, const std::string& sentence, std::size_t mask,
              const std::vector<std::string>& candidates) {
  const auto scorer = scorer_from(flags);
  const auto normalizer = NormalizationConfig::defaults();
  MaskedQuery query;
  query.tokens = token_surfaces(make_sentence(normalize(sentence, normalizer).content));
  query.mask_index = mask;
  for (const auto& c : candidates) query.vocabulary.push_back(normalize(c, normalizer).content);
  const ScoreDistribution scores = scorer->score(query);
  std::cout << json{{"scores", scores.scores()}}.dump() << '\n';
  return kOk;
}

int run_check(const EngineFlags& flags, bool correct, bool per_line) {
  const EngineConfig cfg = engine_config(flags, true);
  const Engine engine = Engine::from_config(cfg);
  const std::string text = read_all(std::cin);
  const CheckResponse response =
      per_line ? engine.check_lines(text, cfg.detector) : engine.check(text, cfg.detector);
  for (const auto& r : response.sentences) {
    std::cout << (correct ? correct_record_json(r) : check_record_json(r)) << '\n';
    if (r.error) spdlog::warn("sentence {}: {}", r.sentence_id, r.error->message);
  }
  return response.scorer_failed() ? kRuntime : kOk;
}

int run_inject(const std::string& spec_path, const std::string& corpus, const std::string& out_corpus,
               const std::string& out_gold, std::optional<std::uint64_t> seed, const EngineFlags& flags) {
  InjectionSpec spec = spec_path.empty() ? InjectionSpec::defaults() : InjectionSpec::load(spec_path);
  if (seed) spec.seed = *seed;
  const EngineConfig cfg = engine_config(flags, false);
  const auto normalizer =
      cfg.normalizer_config ? NormalizationConfig::load(*cfg.normalizer_config) : NormalizationConfig::defaults();
  const PertoTable table = cfg.perto_table ? PertoTable::load(*cfg.perto_table) : PertoTable::standard();
  const CandidateIndex index(load_lexicons(cfg, normalizer));

  std::vector<std::string> lines;
  for (const auto& line : split_lines(read_file(corpus))) lines.push_back(normalize(line, normalizer).content);
  const InjectionResult result = inject_errors(lines, spec, index, table);
  for (const auto& w : result.warnings) spdlog::warn("{}", w);

  auto corpus_out = open_out(out_corpus);
  for (const auto& line : result.corpus) corpus_out << line << '\n';
  auto gold_out = open_out(out_gold);
  for (const auto& g : result.gold) gold_out << g.to_json() << '\n';
  spdlog::info("injected {} errors into {} sentences ({} skipped)", result.gold.size(), lines.size(),
               result.warnings.size());
  return kOk;
}

int run_eval(const std::string& gold, const std::string& pred, const std::string& task_name,
             const std::string& edit_type, const std::string& format) {
  const EvalTask task = parse_eval_task(task_name);
  EvalFilter filter;
  if (!edit_type.empty()) filter.edit_type = parse_edit_type(edit_type);
  const Metrics m = evaluate(parse_predictions(read_file(pred)), parse_gold(read_file(gold)), task, filter);

  Report report;
  report.tables.push_back({"Evaluation", task, {{pred, m, std::nullopt}}});
  if (format == "json") std::cout << report.to_json();
  else if (format == "csv") std::cout << report.to_csv();
  else std::cout << report.to_text();
  return kOk;
}

int run_serve(const EngineFlags& flags, const std::string& bind) {
  const EngineConfig cfg = engine_config(flags, true);
  const auto [host, port] = parse_bind(bind);

  // Route SIGINT/SIGTERM to a waiting thread before the server spawns workers.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  const Engine engine = Engine::from_config(cfg);
  Service service(engine, ServiceOptions{1 << 20, cfg.to_redacted_json()});
  const int bound = service.bind(host, port);
  if (bound < 0) throw Error("cannot bind " + bind);
  spdlog::info("serving on {}:{} ({} lexicon entries, scorer {})", host, bound, engine.lexicon().size(),
               engine.scorer().backend());
  std::cout << "listening on " << host << ':' << bound << std::endl;

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    spdlog::info("signal {} received, shutting down", sig);
    service.stop();
  });
  service.listen();
  if (waiter.joinable()) {
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
  }
  return kOk;
}

int run_bench(std::size_t train, std::size_t test, std::optional<double> non_word_rate,
              std::optional<double> real_word_rate, const std::string& format) {
  DeskBenchmarkSpec spec;
  spec.train_sentences = train;
  spec.test_sentences = test;
  if (non_word_rate) spec.injection.non_word.rate_per_10k = *non_word_rate;
  if (real_word_rate) spec.injection.real_word.rate_per_10k = *real_word_rate;
  const DeskBenchmarkResult result = run_desk_benchmark(spec);
  spdlog::info("injected {} non-word and {} real-word errors, {} skipped", result.injected_non_word,
               result.injected_real_word, result.skipped);
  if (format == "json") std::cout << result.report.to_json();
  else if (format == "csv") std::cout << result.report.to_csv();
  else std::cout << result.report.to_text();
  return kOk;
}

}  // namespace spellkit::cli
