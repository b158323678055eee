// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/desk_benchmark.hpp"

#include <memory>

#include "spellkit/engine.hpp"

namespace spellkit {
namespace {

std::vector<Prediction> predictions_of(const CheckResponse& response) {
  std::vector<Prediction> out;
  for (const auto& r : response.sentences) {
    if (!r.detection) continue;
    Prediction p;
    p.sentence_id = r.sentence_id;
    p.token_index = r.detection->token_index;
    p.error_class = r.detection->error_class;
    if (r.correction) p.replacement = r.correction->replacement;
    out.push_back(std::move(p));
  }
  return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string text;
  for (const auto& l : lines) {
    text += l;
    text.push_back('\n');
  }
  return text;
}

}  // namespace

DeskBenchmarkResult run_desk_benchmark(const DeskBenchmarkSpec& spec) {
  const SyntheticCorpus corpus(spec.corpus);
  const auto normalizer = NormalizationConfig::defaults();

  std::vector<std::vector<std::string>> training;
  for (const auto& line : corpus.sentences(spec.train_sentences, spec.train_seed))
    training.push_back(token_surfaces(make_sentence(line)));
  auto model = std::make_shared<FourGramModel>(FourGramModel::train(training, spec.weights));

  const Engine engine(normalizer, corpus.lexicon(), PertoTable::standard(), model, spec.detector);
  const InjectionResult injected =
      inject_errors(corpus.sentences(spec.test_sentences, spec.test_seed), spec.injection, engine.index());
  const std::string text = join_lines(injected.corpus);

  DeskBenchmarkResult result;
  result.skipped = injected.warnings.size();
  for (const auto& g : injected.gold)
    ++(g.error_class == ErrorClass::NonWord ? result.injected_non_word : result.injected_real_word);

  struct Run {
    std::string name;
    bool perto;
  };
  const Run runs[] = {{"fourgram", false}, {"fourgram+perto", true}};
  const EvalTask tasks[] = {EvalTask::NonWordDetection, EvalTask::NonWordCorrection, EvalTask::RealWordDetection,
                            EvalTask::RealWordCorrection};

  std::map<std::string, std::vector<Prediction>> predictions;
  for (const auto& run : runs) {
    DetectorConfig cfg = spec.detector;
    cfg.use_perto = run.perto;
    predictions[run.name] = predictions_of(engine.check_lines(text, cfg));
  }

  for (const EvalTask task : tasks) {
    ReportTable table;
    table.title = "Desk benchmark";
    table.task = task;
    for (const auto& run : runs) {
      const auto& preds = predictions[run.name];
      const std::string key = run.name + "/" + std::string(to_string(task));
      const Metrics m = evaluate(preds, injected.gold, task);
      result.metrics[key] = m;
      result.metrics[key + "/substitution"] =
          evaluate(preds, injected.gold, task, EvalFilter{EditType::Substitution});
      table.rows.push_back({run.name, m, run.perto ? std::optional<std::string>("fourgram") : std::nullopt});
    }
    result.report.tables.push_back(std::move(table));
  }
  return result;
}

}  // namespace spellkit
