// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "properties.hpp"
#include "spellkit/detector.hpp"
#include "spellkit/errors.hpp"

namespace spellkit {
namespace {

using testing::FixedScorer;

Sentence sentence(std::string_view text) {
  return make_sentence(normalize(text, NormalizationConfig::defaults()).content);
}

TEST(DetectNonword, LeftmostOutOfLexiconWord) {
  const auto lex = testing::intraductal_lexicon();
  const auto d = detect_nonword(sentence("در سمت چپ توده بزرگ ديده شدد"), lex);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->token_index, 4U);
  EXPECT_EQ(d->error_class, ErrorClass::NonWord);
  EXPECT_FALSE(d->evidence);
}

TEST(DetectNonword, IgnoresPassThroughTokens) {
  const auto lex = testing::intraductal_lexicon();
  EXPECT_FALSE(detect_nonword(sentence("در سمت چپ 12 mm توده"), lex));
}

TEST(DetectRealword, IntraductalScenario) {
  const CandidateIndex index(testing::intraductal_lexicon());
  const auto scorer = testing::intraductal_scorer();
  const auto d = detect_realword(sentence(testing::intraductal_sentence()), index, *scorer, {});
  ASSERT_TRUE(d);
  EXPECT_EQ(d->token_index, 4U);
  EXPECT_EQ(d->error_class, ErrorClass::RealWord);
  ASSERT_TRUE(d->evidence);
  EXPECT_EQ(d->evidence->candidate, testing::intraductal_correct_word());
  EXPECT_NEAR(d->evidence->candidate_score / d->evidence->original_score, 0.630 / 0.034, 1e-9);
  for (const auto& c : d->evidence->candidates) EXPECT_TRUE(c.contextual_score.has_value());
}

TEST(DetectRealword, MarginSuppressesWeakEvidence) {
  const CandidateIndex index(testing::intraductal_lexicon());
  const auto scorer = testing::intraductal_scorer();
  DetectorConfig cfg;
  cfg.margin = 0.630 / 0.034 + 0.01;
  EXPECT_FALSE(detect_realword(sentence(testing::intraductal_sentence()), index, *scorer, cfg));
  cfg.margin = 0.630 / 0.034 - 0.01;
  EXPECT_TRUE(detect_realword(sentence(testing::intraductal_sentence()), index, *scorer, cfg));
}

TEST(DetectRealword, EqualScoresAreNotErrors) {
  const CandidateIndex index(testing::intraductal_lexicon());
  const FixedScorer flat({}, 1.0);
  EXPECT_FALSE(detect_realword(sentence(testing::intraductal_sentence()), index, flat, {}));
}

TEST(DetectRealword, StopsAtFirstFlaggedToken) {
  Lexicon lex;
  for (const char* w : {"بکر", "بگر", "سمت", "سمن"}) lex.insert(w);
  const CandidateIndex index(lex);
  const FixedScorer scorer({{"بگر", 10.0}, {"سمن", 10.0}}, 1.0);
  const auto d = detect_realword(sentence("بکر سمت"), index, scorer, {});
  ASSERT_TRUE(d);
  EXPECT_EQ(d->token_index, 0U);
}

TEST(DetectRealword, ScorerErrorsPropagate) {
  const CandidateIndex index(testing::intraductal_lexicon());
  const testing::FailingScorer failing([] { throw ScorerTransportError("down"); });
  EXPECT_THROW(detect_realword(sentence(testing::intraductal_sentence()), index, failing, {}), ScorerTransportError);
}

TEST(DetectRealword, MarginMonotonicity) {
  const auto r = testing::detector_margin_monotonicity(19, 1000);
  EXPECT_TRUE(r.ok()) << r.counterexample;
}

TEST(DetectorConfig, Validation) {
  DetectorConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.max_dist = 3;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.margin = 0.9;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.top_k = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(ErrorClass, Names) {
  EXPECT_EQ(to_string(ErrorClass::NonWord), "non_word");
  EXPECT_EQ(parse_error_class("real_word"), ErrorClass::RealWord);
  EXPECT_THROW(parse_error_class("typo"), InputError);
}

}  // namespace
}  // namespace spellkit
