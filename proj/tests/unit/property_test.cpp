// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include <gtest/gtest.h>

#include "properties.hpp"

namespace spellkit::testing {
namespace {

constexpr std::size_t kCases = 1000;

void expect_ok(const PropertyReport& r) {
  EXPECT_EQ(r.cases, kCases) << r.name;
  EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures, e.g. " << r.counterexample;
}

TEST(Property, NormalizerIdempotence) { expect_ok(normalizer_idempotence(11, kCases)); }
TEST(Property, LexiconUnionLaw) { expect_ok(lexicon_union_law(12, kCases)); }
TEST(Property, ScorerNormalization) { expect_ok(scorer_normalization(13, kCases)); }
TEST(Property, ScorerMaskIndependence) { expect_ok(scorer_mask_independence(14, kCases)); }
TEST(Property, ScorerDeterminism) { expect_ok(scorer_determinism(15, kCases)); }
TEST(Property, DetectorMarginMonotonicity) { expect_ok(detector_margin_monotonicity(16, kCases)); }
TEST(Property, CorrectorSingleTokenChange) { expect_ok(corrector_single_token_change(17, kCases)); }
TEST(Property, CorrectorFallbackEquivalence) { expect_ok(corrector_fallback_equivalence(18, kCases)); }

}  // namespace
}  // namespace spellkit::testing
