// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include <benchmark/benchmark.h>

#include "spellkit/candidate_index.hpp"
#include "spellkit/editops.hpp"
#include "spellkit/fourgram.hpp"
#include "spellkit/perto.hpp"
#include "spellkit/random.hpp"
#include "spellkit/synthetic.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {
namespace {

const SyntheticCorpus& corpus() {
  static const SyntheticCorpus c{SyntheticCorpusSpec{}};
  return c;
}

std::vector<std::u32string> words(std::size_t n) {
  const auto all = corpus().lexicon().sorted_entries();
  Rng rng(7);
  std::vector<std::u32string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(utf8::decode(all[rng.below(all.size())]));
  return out;
}

void BM_OsaDistance(benchmark::State& state) {
  const auto w = words(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(osa_distance(w[i % 256], w[(i * 7 + 3) % 256]));
    ++i;
  }
}
BENCHMARK(BM_OsaDistance);

void BM_OsaDistanceWithin2(benchmark::State& state) {
  const auto w = words(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(osa_distance_within(w[i % 256], w[(i * 7 + 3) % 256], 2));
    ++i;
  }
}
BENCHMARK(BM_OsaDistanceWithin2);

void BM_IndexGenerate(benchmark::State& state) {
  static const CandidateIndex index(corpus().lexicon());
  const auto w = words(256);
  const auto d = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(index.generate(utf8::encode(w[i++ % 256]), d));
  state.counters["lexicon"] = static_cast<double>(corpus().lexicon().size());
}
BENCHMARK(BM_IndexGenerate)->Arg(1)->Arg(2);

// Baseline for the index: bounded distance against every entry.
void BM_FullScan(benchmark::State& state) {
  std::vector<std::u32string> lexicon;
  for (const auto& e : corpus().lexicon().sorted_entries()) lexicon.push_back(utf8::decode(e));
  const auto w = words(256);
  const auto d = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    std::size_t hits = 0;
    const auto& q = w[i++ % 256];
    for (const auto& e : lexicon)
      if (osa_distance_within(q, e, d)) ++hits;
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_FullScan)->Arg(1)->Arg(2);

void BM_FourGramScore(benchmark::State& state) {
  static const FourGramModel model = [] {
    std::vector<std::vector<std::string>> sentences;
    for (const auto& s : corpus().sentences(20'000, 3)) {
      std::vector<std::string> tokens;
      std::size_t at = 0;
      const std::string body = s.substr(0, s.size() - 1);
      while (at <= body.size()) {
        const auto sp = body.find(' ', at);
        tokens.push_back(body.substr(at, sp == std::string::npos ? std::string::npos : sp - at));
        if (sp == std::string::npos) break;
        at = sp + 1;
      }
      sentences.push_back(std::move(tokens));
    }
    return FourGramModel::train(sentences);
  }();
  static const CandidateIndex index(corpus().lexicon());
  const auto sentence = corpus().sentences(1, 11).front();
  MaskedQuery q;
  for (std::size_t at = 0, sp; (sp = sentence.find(' ', at)) != std::string::npos; at = sp + 1)
    q.tokens.push_back(sentence.substr(at, sp - at));
  q.mask_index = q.tokens.size() / 2;
  q.vocabulary.push_back(q.tokens[q.mask_index]);
  for (const auto& c : index.generate(q.tokens[q.mask_index], 2)) q.vocabulary.push_back(c.word);
  for (auto _ : state) benchmark::DoNotOptimize(model.score(q));
  state.counters["candidates"] = static_cast<double>(q.vocabulary.size());
}
BENCHMARK(BM_FourGramScore);

void BM_PertoCode(benchmark::State& state) {
  const auto w = words(256);
  const PertoTable& table = PertoTable::standard();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(perto_code(std::u32string_view(w[i++ % 256]), table));
}
BENCHMARK(BM_PertoCode);

}  // namespace
}  // namespace spellkit

BENCHMARK_MAIN();
