// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include <set>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "spellkit/errors.hpp"
#include "spellkit/evalharness.hpp"
#include "spellkit/normalizer.hpp"
#include "spellkit/synthetic.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {
namespace {

GoldRecord gold(std::size_t sid, std::size_t token, ErrorClass cls = ErrorClass::NonWord,
                EditType type = EditType::Substitution) {
  return {sid, token, "orig" + std::to_string(sid), "bad", cls, type, 1};
}

Prediction pred(std::size_t sid, std::size_t token, ErrorClass cls = ErrorClass::NonWord,
                std::optional<std::string> replacement = std::nullopt) {
  return {sid, token, cls, std::move(replacement)};
}

TEST(Evaluate, DetectionCountsByPosition) {
  const std::vector<GoldRecord> g{gold(0, 1), gold(1, 2), gold(2, 0)};
  const std::vector<Prediction> p{pred(0, 1), pred(1, 3), pred(3, 0)};
  const auto m = evaluate(p, g, EvalTask::NonWordDetection);
  EXPECT_EQ(m.true_positives, 1U);
  EXPECT_EQ(m.false_positives, 2U);
  EXPECT_EQ(m.false_negatives, 2U);
  EXPECT_DOUBLE_EQ(m.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.recall, 1.0 / 3.0);
}

TEST(Evaluate, CorrectionNeedsTheOriginalWord) {
  const std::vector<GoldRecord> g{gold(0, 1), gold(1, 2)};
  const std::vector<Prediction> p{pred(0, 1, ErrorClass::NonWord, "orig0"), pred(1, 2, ErrorClass::NonWord, "other")};
  const auto m = evaluate(p, g, EvalTask::NonWordCorrection);
  EXPECT_EQ(m.true_positives, 1U);
  EXPECT_EQ(m.false_positives, 1U);
  EXPECT_EQ(m.false_negatives, 1U);
}

TEST(Evaluate, CorrectionIgnoresDetectionsWithoutReplacement) {
  const auto m = evaluate({pred(0, 1)}, {gold(0, 1)}, EvalTask::NonWordCorrection);
  EXPECT_EQ(m.false_positives, 0U);
  EXPECT_EQ(m.false_negatives, 1U);
}

TEST(Evaluate, ClassesAreSeparate) {
  const std::vector<GoldRecord> g{gold(0, 1, ErrorClass::RealWord)};
  const std::vector<Prediction> p{pred(0, 1, ErrorClass::NonWord)};
  const auto nw = evaluate(p, g, EvalTask::NonWordDetection);
  EXPECT_EQ(nw.false_positives, 1U);
  EXPECT_EQ(nw.false_negatives, 0U);
  const auto rw = evaluate(p, g, EvalTask::RealWordDetection);
  EXPECT_EQ(rw.false_positives, 0U);
  EXPECT_EQ(rw.false_negatives, 1U);
}

TEST(Evaluate, EditTypeFilter) {
  const std::vector<GoldRecord> g{gold(0, 1), gold(1, 1, ErrorClass::NonWord, EditType::Deletion)};
  const std::vector<Prediction> p{pred(0, 1), pred(1, 0), pred(2, 0)};
  const auto m = evaluate(p, g, EvalTask::NonWordDetection, {EditType::Substitution});
  EXPECT_EQ(m.true_positives, 1U);
  EXPECT_EQ(m.false_positives, 0U);
  EXPECT_EQ(m.false_negatives, 0U);
}

TEST(Evaluate, DuplicateIdsAreRejected) {
  EXPECT_THROW(evaluate({}, {gold(0, 1), gold(0, 2)}, EvalTask::NonWordDetection), InputError);
  EXPECT_THROW(evaluate({pred(0, 1), pred(0, 2)}, {}, EvalTask::NonWordDetection), InputError);
}

TEST(Metrics, EmptyAndDirectF1) {
  const auto m = Metrics::from_counts(0, 0, 0);
  EXPECT_EQ(m.f1, 0.0);
  testing::Gen gen(3);
  for (int i = 0; i < 1000; ++i) {
    const double p = gen.unit(), r = gen.unit();
    ASSERT_NEAR(f1_score(p, r), testing::f1_oracle(p, r), 1e-9);
  }
}

TEST(Parse, PredictionsFromCorrectOutput) {
  const std::string jsonl =
      R"({"sentence_id": 0, "detection": null})"
      "\n"
      R"({"sentence_id": 1, "detection": {"token_index": 2, "error_class": "non_word"}, "corrections": [{"suggested": "مایع"}]})"
      "\n\n"
      R"({"sentence_id": 2, "detection": {"token_index": 0, "error_class": "real_word"}})"
      "\n";
  const auto p = parse_predictions(jsonl);
  ASSERT_EQ(p.size(), 2U);
  EXPECT_EQ(p[0].sentence_id, 1U);
  EXPECT_EQ(p[0].replacement, "مایع");
  EXPECT_EQ(p[1].error_class, ErrorClass::RealWord);
  EXPECT_FALSE(p[1].replacement);
  EXPECT_THROW(parse_predictions("{\"sentence_id\": 1}\n"), InputError);
}

TEST(Parse, GoldRoundTrip) {
  const GoldRecord g{4, 2, "مایع", "مایغ", ErrorClass::NonWord, EditType::Substitution, 1};
  EXPECT_EQ(GoldRecord::from_json(g.to_json()), g);
  EXPECT_EQ(parse_gold(g.to_json() + "\n" + g.to_json() + "\n").size(), 2U);
  EXPECT_THROW(parse_gold("{\"sentence_id\": 1}"), InputError);
  EXPECT_THROW(GoldRecord::from_json(R"({"sentence_id":0,"token_index":0,"original":"a","corrupted":"b",)"
                                     R"("error_class":"typo","edit_type":"substitution","distance":1})"),
               InputError);
}

TEST(InjectionSpec, DefaultsAreNormalized) {
  const auto s = InjectionSpec::defaults();
  EXPECT_DOUBLE_EQ(s.non_word.rate_per_10k, 120.0);
  EXPECT_DOUBLE_EQ(s.real_word.rate_per_10k, 29.0);
  EXPECT_NEAR(s.non_word.type_mix[0], 0.491, 1e-9);
  EXPECT_NEAR(s.real_word.distance_mix[0], 85.5 / 98.1, 1e-9);
  EXPECT_NEAR(s.non_word.distance_mix[0] + s.non_word.distance_mix[1], 1.0, 1e-12);
}

TEST(InjectionSpec, JsonRoundTripAndErrors) {
  auto s = InjectionSpec::defaults();
  s.seed = 99;
  const auto back = InjectionSpec::from_json(s.to_json());
  EXPECT_EQ(back.seed, 99U);
  EXPECT_EQ(back.non_word.type_mix, s.non_word.type_mix);
  const auto partial = InjectionSpec::from_json(R"({"non_word": {"rate_per_10k": 500}})");
  EXPECT_DOUBLE_EQ(partial.non_word.rate_per_10k, 500.0);
  EXPECT_EQ(partial.real_word.type_mix, s.real_word.type_mix);
  EXPECT_THROW(InjectionSpec::from_json(R"({"bogus": 1})"), ConfigError);
  EXPECT_THROW(InjectionSpec::from_json(R"({"non_word": {"type_mix": {"mixed": 1}}})"), ConfigError);
  EXPECT_THROW(InjectionSpec::from_json(R"({"non_word": {"distance_mix": {"3": 1}}})"), ConfigError);
  EXPECT_THROW(InjectionSpec::from_json(R"({"non_word": {"rate_per_10k": 6000}, "real_word": {"rate_per_10k": 6000}})"),
               ConfigError);
  EXPECT_THROW(InjectionSpec::from_json(R"({"confusable_substitution_rate": 2})"), ConfigError);
}

class Injection : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    corpus_ = new SyntheticCorpus(SyntheticCorpusSpec{});
    index_ = new CandidateIndex(corpus_->lexicon());
  }
  static void TearDownTestSuite() {
    delete index_;
    delete corpus_;
  }
  static SyntheticCorpus* corpus_;
  static CandidateIndex* index_;
};
SyntheticCorpus* Injection::corpus_ = nullptr;
CandidateIndex* Injection::index_ = nullptr;

TEST_F(Injection, GoldRecordsReverify) {
  const auto sentences = corpus_->sentences(5000, 3);
  auto spec = InjectionSpec::defaults();
  spec.non_word.rate_per_10k = 3000;
  spec.real_word.rate_per_10k = 3000;
  const auto r = inject_errors(sentences, spec, *index_);
  ASSERT_EQ(r.corpus.size(), sentences.size());
  ASSERT_GT(r.gold.size(), 2000U);
  std::set<std::size_t> ids;
  for (const auto& g : r.gold) {
    ASSERT_TRUE(ids.insert(g.sentence_id).second);
    const auto o = utf8::decode(g.original), c = utf8::decode(g.corrupted);
    ASSERT_EQ(testing::osa_oracle(o, c), g.distance);
    ASSERT_EQ(testing::classify_oracle(o, c), g.edit_type);
    ASSERT_EQ(corpus_->lexicon().contains(g.corrupted), g.error_class == ErrorClass::RealWord);
    const auto tokens = tokenize(r.corpus[g.sentence_id]);
    ASSERT_EQ(tokens.at(g.token_index).surface, g.corrupted);
  }
  for (std::size_t i = 0; i < sentences.size(); ++i)
    if (!ids.contains(i)) {
      ASSERT_EQ(r.corpus[i], sentences[i]);
    }
}

TEST_F(Injection, SeedDeterminism) {
  const auto sentences = corpus_->sentences(2000, 4);
  auto spec = InjectionSpec::defaults();
  spec.non_word.rate_per_10k = 2000;
  const auto a = inject_errors(sentences, spec, *index_);
  const auto b = inject_errors(sentences, spec, *index_);
  EXPECT_EQ(a.corpus, b.corpus);
  EXPECT_EQ(a.gold, b.gold);
  spec.seed = 2;
  EXPECT_NE(inject_errors(sentences, spec, *index_).gold, a.gold);
}

TEST_F(Injection, ZeroRatesLeaveCorpusUntouched) {
  const auto sentences = corpus_->sentences(500, 5);
  auto spec = InjectionSpec::defaults();
  spec.non_word.rate_per_10k = 0;
  spec.real_word.rate_per_10k = 0;
  const auto r = inject_errors(sentences, spec, *index_);
  EXPECT_EQ(r.corpus, sentences);
  EXPECT_TRUE(r.gold.empty());
}

TEST_F(Injection, ImpossibleErrorsAreSkippedWithWarning) {
  // no lexicon word in these sentences, so nothing is eligible
  const std::vector<std::string> sentences{"12 34.", "abc."};
  auto spec = InjectionSpec::defaults();
  spec.non_word.rate_per_10k = 10'000;
  spec.real_word.rate_per_10k = 0;
  const auto r = inject_errors(sentences, spec, *index_);
  EXPECT_TRUE(r.gold.empty());
  ASSERT_EQ(r.warnings.size(), 2U);
  EXPECT_EQ(r.warnings[0].rfind("sentence 0: no non_word", 0), 0U);
}

TEST(EvalTask, Names) {
  for (auto t : {EvalTask::NonWordDetection, EvalTask::NonWordCorrection, EvalTask::RealWordDetection,
                 EvalTask::RealWordCorrection})
    EXPECT_EQ(parse_eval_task(to_string(t)), t);
  EXPECT_THROW(parse_eval_task("detection"), InputError);
}

}  // namespace
}  // namespace spellkit
