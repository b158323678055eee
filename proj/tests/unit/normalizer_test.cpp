// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include <algorithm>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "spellkit/errors.hpp"
#include "spellkit/normalizer.hpp"

namespace spellkit {
namespace {

std::string norm(std::string_view s) { return normalize(s, NormalizationConfig::defaults()).content; }

TEST(Normalize, MapsArabicLettersToPersian) {
  EXPECT_EQ(norm("اينتراركتال"), "اینترارکتال");
  EXPECT_EQ(norm("كبد طبيعي"), "کبد طبیعی");
  EXPECT_EQ(norm("مدرسة"), "مدرسه");
}

TEST(Normalize, RemovesDiacriticsAndKashida) {
  EXPECT_EQ(norm("ذَرّه"), "ذره");
  EXPECT_EQ(norm("بـــاند"), "باند");
}

TEST(Normalize, RepairsPseudoSpaces) {
  EXPECT_EQ(norm("می شود"), "می‌شود");
  EXPECT_EQ(norm("نمی شود"), "نمی‌شود");
  EXPECT_EQ(norm("کتاب ها"), "کتاب‌ها");
  EXPECT_EQ(norm("توده های"), "توده‌های");
  // a standalone word that merely starts like an affix stays apart
  EXPECT_EQ(norm("کتاب هاشم"), "کتاب هاشم");
  EXPECT_EQ(norm("رومی شود"), "رومی شود");
  // line breaks are not pseudo-spaces
  EXPECT_EQ(norm("می\nشود"), "می\nشود");
}

TEST(Normalize, ReportsAppliedRules) {
  const auto r = normalize("كِتاب ها", NormalizationConfig::defaults());
  EXPECT_EQ(r.applied_rules, (std::vector<std::string>{"character_map", "diacritics", "pseudo_space"}));
  EXPECT_TRUE(normalize("کتاب", NormalizationConfig::defaults()).applied_rules.empty());
}

TEST(Normalize, DisabledFamiliesAreSkipped) {
  auto cfg = NormalizationConfig::defaults();
  cfg.map_characters = false;
  cfg.repair_pseudo_space = false;
  EXPECT_EQ(normalize("كتاب ها", cfg).content, "كتاب ها");
}

TEST(Normalize, InvalidUtf8Throws) { EXPECT_THROW(norm("ab\xFF"), DecodeError); }

TEST(Normalize, IdempotentOnGeneratedText) {
  const auto r = testing::normalizer_idempotence(17, 2000);
  EXPECT_TRUE(r.ok()) << r.counterexample;
}

TEST(NormalizationConfig, JsonRoundTrip) {
  const auto cfg = NormalizationConfig::defaults();
  const auto back = NormalizationConfig::from_json(cfg.to_json());
  EXPECT_EQ(back.character_map, cfg.character_map);
  EXPECT_EQ(back.diacritics, cfg.diacritics);
  EXPECT_EQ(back.kashida, cfg.kashida);
  EXPECT_EQ(back.joining_prefixes, cfg.joining_prefixes);
  EXPECT_EQ(back.joining_suffixes, cfg.joining_suffixes);
}

TEST(NormalizationConfig, BundledFileMatchesDefaults) {
  const auto loaded = NormalizationConfig::load(testing::data_dir() / "normalizer.json");
  EXPECT_EQ(loaded.to_json(), NormalizationConfig::defaults().to_json());
}

TEST(NormalizationConfig, RejectsTablesThatBreakIdempotence) {
  // target of one mapping is itself mapped
  EXPECT_THROW(NormalizationConfig::from_json(R"({"character_map": {"U+064A": "U+0643", "U+0643": "U+06A9"}})"),
               ConfigError);
  // mapping into a removed character
  EXPECT_THROW(NormalizationConfig::from_json(R"({"character_map": {"U+064A": "U+064E"}, "diacritics": ["U+064E"]})"),
               ConfigError);
  EXPECT_THROW(NormalizationConfig::from_json(R"({"diacritics": ["xy"]})"), ConfigError);
  EXPECT_THROW(NormalizationConfig::from_json("{"), ConfigError);
}

TEST(Segment, SplitsOnDelimitersAndTrims) {
  const auto s = segment_sentences("اول است.  دوم است!\nسوم؟ چهارم");
  ASSERT_EQ(s.size(), 4U);
  EXPECT_EQ(s[0].text, "اول است");
  EXPECT_EQ(s[1].text, "دوم است");
  EXPECT_EQ(s[2].text, "سوم");
  EXPECT_EQ(s[3].text, "چهارم");
}

TEST(Segment, DecimalPointIsNotADelimiter) {
  const auto s = segment_sentences("اندازه 12.5 میلیمتر است. پایان");
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s[0].text, "اندازه 12.5 میلیمتر است");
  ASSERT_EQ(s[0].tokens.size(), 4U);
  EXPECT_EQ(s[0].tokens[1].surface, "12.5");
  EXPECT_EQ(s[0].tokens[1].kind, TokenKind::PassThrough);
}

TEST(Segment, DropsEmptySegments) {
  EXPECT_TRUE(segment_sentences("...  !? ").empty());
  EXPECT_EQ(segment_sentences("الف.. ب").size(), 2U);
}

TEST(Segment, MatchesOracleOnGeneratedDocuments) {
  testing::Gen gen(23);
  for (int i = 0; i < 1000; ++i) {
    const std::string doc = gen.document(gen.between(1, 6));
    const auto got = segment_sentences(doc);
    std::vector<std::string> texts;
    for (const auto& s : got) {
      texts.push_back(s.text);
      ASSERT_EQ(doc.substr(s.span.begin, s.span.end - s.span.begin), s.text);
      for (const auto& t : s.tokens) ASSERT_EQ(doc.substr(t.span.begin, t.span.end - t.span.begin), t.surface);
    }
    ASSERT_EQ(texts, testing::segment_oracle(doc)) << doc;
  }
}

TEST(Tokenize, KindsAndSpans) {
  const auto tokens = tokenize("در 3 محل،می‌شود abc", 10);
  ASSERT_EQ(tokens.size(), 5U);
  EXPECT_EQ(tokens[0].surface, "در");
  EXPECT_EQ(tokens[0].span, (Span{10, 14}));
  EXPECT_EQ(tokens[1].kind, TokenKind::PassThrough);
  EXPECT_EQ(tokens[2].surface, "محل");
  EXPECT_EQ(tokens[3].surface, "می‌شود");
  EXPECT_TRUE(tokens[3].is_word());
  EXPECT_EQ(tokens[4].kind, TokenKind::PassThrough);
  for (std::size_t i = 0; i < tokens.size(); ++i) EXPECT_EQ(tokens[i].index, i);
}

TEST(Tokenize, LoneZwnjIsNotAWord) {
  const auto tokens = tokenize("‌");
  ASSERT_EQ(tokens.size(), 1U);
  EXPECT_EQ(tokens[0].kind, TokenKind::PassThrough);
}

}  // namespace
}  // namespace spellkit
