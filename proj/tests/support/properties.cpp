// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "spellkit/corrector.hpp"
#include "spellkit/detector.hpp"
#include "spellkit/engine.hpp"
#include "spellkit/fourgram.hpp"
#include "spellkit/lexicon.hpp"
#include "spellkit/normalizer.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit::testing {
namespace {

using Check = std::function<std::string(Gen&)>;  // empty string = pass

PropertyReport run(const std::string& name, std::uint64_t seed, std::size_t cases, const Check& check) {
  PropertyReport r;
  r.name = name;
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    std::string why;
    try {
      why = check(gen);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      if (r.failures++ == 0) r.counterexample = "case " + std::to_string(i) + ": " + why;
    }
  }
  return r;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

// Small world with a dense lexicon so that most words have neighbours, and a
// four-gram model trained on sentences drawn from it.
struct DenseWorld {
  std::vector<std::string> words;
  Lexicon lexicon;
  std::shared_ptr<FourGramModel> model;
  std::unique_ptr<CandidateIndex> index;

  explicit DenseWorld(std::uint64_t seed) {
    Gen gen(seed);
    const std::u32string letters = U"سشبپمی";
    std::set<std::string> unique;
    while (unique.size() < 60) unique.insert(utf8::encode(gen.word(letters, 2, 4)));
    words.assign(unique.begin(), unique.end());
    for (const auto& w : words) lexicon.insert(w);
    std::vector<std::vector<std::string>> corpus;
    for (int s = 0; s < 300; ++s) {
      std::vector<std::string> sentence;
      const std::size_t len = gen.between(2, 7);
      for (std::size_t i = 0; i < len; ++i) sentence.push_back(words[gen.index(words.size() / 2)]);
      corpus.push_back(std::move(sentence));
    }
    model = std::make_shared<FourGramModel>(FourGramModel::train(corpus));
    index = std::make_unique<CandidateIndex>(lexicon);
  }

  std::vector<std::string> sentence(Gen& gen) const {
    std::vector<std::string> s;
    const std::size_t len = gen.between(1, 7);
    for (std::size_t i = 0; i < len; ++i) s.push_back(words[gen.index(words.size())]);
    return s;
  }
};

const DenseWorld& dense_world() {
  static const DenseWorld world(20260101);
  return world;
}

bool has_forbidden(const std::string& text) {
  for (char32_t c : utf8::decode(text)) {
    if (c == 0x064A || c == 0x0649 || c == 0x0643 || c == 0x0629 || c == 0x06C0 || c == 0x06C1 ||
        c == 0x06BE || c == 0x06D5 || c == 0x0640 || (c >= 0x064B && c <= 0x0655) || c == 0x0670)
      return true;
  }
  return false;
}

std::u32string perto_oracle_code(std::u32string_view w) {
  std::u32string code;
  for (char32_t c : w) {
    const auto g = perto_reference_group(c);
    code.push_back(g ? static_cast<char32_t>(0xE000 + *g) : c);
  }
  return code;
}

}  // namespace

PropertyReport normalizer_idempotence(std::uint64_t seed, std::size_t cases) {
  const auto cfg = NormalizationConfig::defaults();
  return run("normalizer idempotence", seed, cases, [&](Gen& gen) -> std::string {
    const std::string raw = gen.messy_text();
    const NormalizedText once = normalize(raw, cfg);
    const NormalizedText twice = normalize(once.content, cfg);
    if (twice.content != once.content) return "not idempotent on '" + raw + "'";
    if (!twice.applied_rules.empty()) return "second pass reported rules on '" + raw + "'";
    if (has_forbidden(once.content)) return "variant characters survive in '" + once.content + "'";
    return {};
  });
}

PropertyReport lexicon_union_law(std::uint64_t seed, std::size_t cases) {
  return run("lexicon union law", seed, cases, [](Gen& gen) -> std::string {
    const std::u32string letters = U"ابپت";
    Lexicon a, b;
    std::set<std::string> sa, sb;
    for (std::size_t i = gen.between(0, 12); i > 0; --i) {
      const std::string w = utf8::encode(gen.word(letters, 1, 3));
      a.insert(w, "general");
      sa.insert(w);
    }
    for (std::size_t i = gen.between(0, 12); i > 0; --i) {
      const std::string w = utf8::encode(gen.word(letters, 1, 3));
      b.insert(w, "radiology");
      sb.insert(w);
    }
    const Lexicon m = merge(a, b);
    std::set<std::string> expected = sa;
    expected.insert(sb.begin(), sb.end());
    if (m.size() != expected.size()) return "size " + std::to_string(m.size()) + " != " + std::to_string(expected.size());
    for (int probe = 0; probe < 20; ++probe) {
      const std::string w = utf8::encode(gen.word(letters, 1, 3));
      if (m.contains(w) != (sa.contains(w) || sb.contains(w))) return "membership differs for '" + w + "'";
    }
    for (const auto& w : expected)
      if (!m.contains(w)) return "missing '" + w + "'";
    if (!(merge(b, a) == m)) return "not commutative";
    if (!(merge(a, a) == a)) return "not idempotent";
    if (!(merge(m, a) == m)) return "not absorbing";
    return {};
  });
}

PropertyReport scorer_normalization(std::uint64_t seed, std::size_t cases) {
  const auto& world = dense_world();
  return run("scorer normalization", seed, cases, [&](Gen& gen) -> std::string {
    MaskedQuery q{world.sentence(gen), 0, {}};
    q.mask_index = gen.index(q.tokens.size());
    std::set<std::string> vocab;
    for (std::size_t i = gen.between(1, 8); i > 0; --i)
      vocab.insert(gen.chance(0.2) ? gen.persian_word(2, 5) : world.words[gen.index(world.words.size())]);
    q.vocabulary.assign(vocab.begin(), vocab.end());
    const ScoreDistribution d = world.model->score(q);
    double sum = 0.0;
    for (const auto& [w, p] : d.scores()) {
      if (!(p >= 0.0) || !std::isfinite(p)) return "bad probability for '" + w + "'";
      if (!vocab.contains(w)) return "unrequested word '" + w + "'";
      sum += p;
    }
    if (d.size() != vocab.size()) return "distribution over the wrong words";
    if (std::abs(sum - 1.0) > 1e-9) return "sum " + std::to_string(sum) + " for " + join(q.tokens);
    return {};
  });
}

PropertyReport scorer_mask_independence(std::uint64_t seed, std::size_t cases) {
  const auto& world = dense_world();
  return run("scorer mask independence", seed, cases, [&](Gen& gen) -> std::string {
    MaskedQuery q{world.sentence(gen), 0, {}};
    q.mask_index = gen.index(q.tokens.size());
    std::set<std::string> vocab{q.tokens[q.mask_index]};
    for (std::size_t i = gen.between(0, 5); i > 0; --i) vocab.insert(world.words[gen.index(world.words.size())]);
    q.vocabulary.assign(vocab.begin(), vocab.end());
    const ScoreDistribution before = world.model->score(q);
    q.tokens[q.mask_index] = gen.chance(0.5) ? gen.persian_word(1, 9) : world.words[gen.index(world.words.size())];
    if (!(world.model->score(q) == before)) return "masked token changed the scores in " + join(q.tokens);
    return {};
  });
}

PropertyReport scorer_determinism(std::uint64_t seed, std::size_t cases) {
  const auto& world = dense_world();
  std::stringstream saved;
  world.model->save(saved);
  const FourGramModel reloaded = FourGramModel::load(saved);
  return run("scorer determinism", seed, cases, [&](Gen& gen) -> std::string {
    MaskedQuery q{world.sentence(gen), 0, {}};
    q.mask_index = gen.index(q.tokens.size());
    std::set<std::string> vocab;
    for (std::size_t i = gen.between(1, 6); i > 0; --i) vocab.insert(world.words[gen.index(world.words.size())]);
    q.vocabulary.assign(vocab.begin(), vocab.end());
    const ScoreDistribution a = world.model->score(q);
    if (!(world.model->score(q) == a)) return "repeat call differs";
    if (!(reloaded.score(q) == a)) return "reloaded model differs";
    return {};
  });
}

PropertyReport detector_margin_monotonicity(std::uint64_t seed, std::size_t cases) {
  const auto& world = dense_world();
  return run("detector margin monotonicity", seed, cases, [&](Gen& gen) -> std::string {
    std::string text = join(world.sentence(gen));
    const Sentence s = make_sentence(text);
    DetectorConfig low, high;
    low.margin = 1.0 + gen.unit() * 2.0;
    high.margin = low.margin + gen.unit() * 2.0;
    low.max_dist = high.max_dist = gen.between(1, 2);
    const auto dl = detect_realword(s, *world.index, *world.model, low);
    const auto dh = detect_realword(s, *world.index, *world.model, high);
    for (const auto& [d, cfg] : {std::pair{&dl, &low}, std::pair{&dh, &high}}) {
      if (*d && !((*d)->evidence->candidate_score > (*d)->evidence->original_score * cfg->margin))
        return "evidence below margin in '" + text + "'";
    }
    if (dh && !dl) return "detection appears at higher margin in '" + text + "'";
    if (dh && dl->token_index > dh->token_index) return "lower margin detects later in '" + text + "'";
    return {};
  });
}

PropertyReport corrector_single_token_change(std::uint64_t seed, std::size_t cases) {
  const auto& world = dense_world();
  static const Engine engine(NormalizationConfig::defaults(), world.lexicon, PertoTable::standard(), world.model,
                             DetectorConfig{});
  return run("corrector single-token change", seed, cases, [&](Gen& gen) -> std::string {
    auto tokens = world.sentence(gen);
    if (gen.chance(0.5)) tokens[gen.index(tokens.size())] = utf8::encode(gen.word(U"سشبپمیت", 2, 4));
    const std::string text = join(tokens);
    const Sentence s = make_sentence(text);
    DetectorConfig cfg;
    cfg.use_perto = gen.chance(0.5);
    cfg.top_k = gen.between(1, 10);
    const SentenceResult r = engine.check_sentence(s, 0, cfg);
    if (!r.correction) {
      if (r.corrected_text != text) return "text changed without a correction";
      return {};
    }
    const Correction& c = *r.correction;
    const Sentence after = make_sentence(r.corrected_text);
    if (after.tokens.size() != s.tokens.size()) return "token count changed in '" + text + "'";
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const std::string& expect = i == c.token_index ? c.replacement : s.tokens[i].surface;
      if (after.tokens[i].surface != expect) return "token " + std::to_string(i) + " differs in '" + text + "'";
    }
    if (!world.lexicon.contains(c.replacement)) return "replacement outside the lexicon";
    if (c.ranked_candidates.empty() || c.ranked_candidates.front().word != c.replacement)
      return "replacement is not rank 1";
    if (c.ranked_candidates.size() > cfg.top_k) return "more than top_k candidates";
    return {};
  });
}

PropertyReport corrector_fallback_equivalence(std::uint64_t seed, std::size_t cases) {
  return run("corrector fallback equivalence", seed, cases, [](Gen& gen) -> std::string {
    const std::u32string error = gen.word(persian_alphabet(), 2, 5);
    std::vector<Candidate> candidates;
    std::map<std::string, double, std::less<>> raw;
    std::vector<std::string> vocab;
    for (std::size_t i = gen.between(1, 14); i > 0; --i) {
      std::u32string w = error;
      const EditType type = static_cast<EditType>(gen.index(5));
      if (type == EditType::Substitution) {
        // keep the length so a PERTO match is possible
        w[gen.index(w.size())] = persian_alphabet()[gen.index(persian_alphabet().size())];
      } else {
        w = gen.word(persian_alphabet(), 1, 6);
      }
      const std::string word = utf8::encode(w);
      if (raw.contains(word) || w == error) continue;
      candidates.push_back({word, gen.between(1, 2), type, std::nullopt, std::nullopt});
      raw[word] = static_cast<double>(gen.between(0, 6));  // coarse, so ties happen
      vocab.push_back(word);
    }
    if (candidates.empty()) return {};
    const ScoreDistribution scores = ScoreDistribution::normalized(raw, vocab);
    DetectorConfig cfg;
    cfg.top_k = gen.between(1, 10);

    // reference: score desc, distance asc, word asc
    std::vector<Candidate> order = candidates;
    std::sort(order.begin(), order.end(), [&](const Candidate& a, const Candidate& b) {
      const double sa = scores.at(a.word), sb = scores.at(b.word);
      if (sa != sb) return sa > sb;
      if (a.distance != b.distance) return a.distance < b.distance;
      return a.word < b.word;
    });
    order.resize(std::min(order.size(), cfg.top_k));
    const auto matches = [&](const Candidate& c) {
      return c.edit_type == EditType::Substitution && perto_oracle_code(utf8::decode(c.word)) == perto_oracle_code(error);
    };
    const auto gated = std::find_if(order.begin(), order.end(), matches);

    cfg.use_perto = false;
    const Correction off = rank_and_select(utf8::encode(error), scores, candidates, cfg);
    cfg.use_perto = true;
    const Correction on = rank_and_select(utf8::encode(error), scores, candidates, cfg);

    if (off.replacement != order.front().word) return "PERTO-off pick is not the top-scored candidate";
    if (off.used_perto) return "PERTO-off reported a gate";
    if (gated == order.end()) {
      if (on.replacement != off.replacement || on.used_perto) return "empty gate does not fall back to scores";
    } else {
      if (on.replacement != gated->word || !on.used_perto) return "gate did not pick the best matching candidate";
    }
    return {};
  });
}

std::vector<PropertyReport> all_properties(std::uint64_t seed, std::size_t cases) {
  return {normalizer_idempotence(seed, cases),       lexicon_union_law(seed + 1, cases),
          scorer_normalization(seed + 2, cases),     scorer_mask_independence(seed + 3, cases),
          scorer_determinism(seed + 4, cases),       detector_margin_monotonicity(seed + 5, cases),
          corrector_single_token_change(seed + 6, cases), corrector_fallback_equivalence(seed + 7, cases)};
}

}  // namespace spellkit::testing
