// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/synthetic.hpp"

#include <algorithm>
#include <unordered_set>

#include "edit_sampling.hpp"
#include "spellkit/errors.hpp"
#include "spellkit/normalizer.hpp"
#include "spellkit/random.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {
namespace {

constexpr std::size_t kMinWordLength = 3;
constexpr std::size_t kMaxWordLength = 7;
constexpr std::size_t kMaxPoolSize = 4;

// Words the pseudo-space rule would glue to a neighbour.
bool is_affix(const std::string& w) {
  return w == "می" || w == "نمی" || w == "ها" || w == "های" || w == "هایی";
}

}  // namespace

SyntheticCorpus::SyntheticCorpus(const SyntheticCorpusSpec& spec, const PertoTable& table) : spec_(spec) {
  if (spec.base_words < kMaxPoolSize || spec.patterns == 0 || spec.min_sentence_length == 0 ||
      spec.min_sentence_length > spec.max_sentence_length)
    throw ConfigError("synthetic corpus spec is out of range");
  if (!(spec.sibling_rate >= 0.0 && spec.sibling_rate <= 1.0))
    throw ConfigError("sibling_rate must lie in [0, 1]");

  Rng rng(spec.seed);
  const std::u32string alphabet = table.alphabet();
  std::unordered_set<std::string> taken;

  while (corpus_words_.size() < spec.base_words) {
    const std::size_t len = kMinWordLength + rng.below(kMaxWordLength - kMinWordLength + 1);
    std::u32string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet[rng.below(alphabet.size())]);
    std::string word = utf8::encode(w);
    if (!is_affix(word) && taken.insert(word).second) corpus_words_.push_back(std::move(word));
  }

  // Close neighbours of every base word enter the lexicon (not the corpus), so
  // candidate sets are never trivially small.
  for (std::size_t id = 0; id < spec.base_words; ++id) {
    const std::u32string base = utf8::decode(corpus_words_[id]);
    for (EditType type : {EditType::Substitution, EditType::Insertion, EditType::Deletion, EditType::Transposition}) {
      for (std::size_t distance = 1; distance <= kMaxEditDistance; ++distance) {
        const int variants = type == EditType::Substitution ? 2 : 1;
        for (int v = 0; v < variants; ++v) {
          for (int attempt = 0; attempt < 20; ++attempt) {
            const auto edited = detail::random_edit(base, type, distance, rng, table, v == 0 ? 1.0 : 0.0);
            if (edited.size() < 2 || osa_distance(base, edited) != distance || classify_edit(base, edited) != type)
              continue;
            std::string word = utf8::encode(edited);
            if (is_affix(word)) continue;
            lexicon_.insert(word, "synthetic");
            break;
          }
        }
      }
    }
  }

  for (std::size_t p = 0; p < spec.patterns; ++p) {
    Pattern pattern;
    pattern.weight = 1.0 / static_cast<double>(p + 1);
    const std::size_t len =
        spec.min_sentence_length + rng.below(spec.max_sentence_length - spec.min_sentence_length + 1);
    for (std::size_t s = 0; s < len; ++s) {
      std::vector<std::size_t> pool;
      const std::size_t size = 1 + rng.below(kMaxPoolSize);
      while (pool.size() < size) {
        const std::size_t id = rng.below(spec.base_words);
        if (std::find(pool.begin(), pool.end(), id) == pool.end()) pool.push_back(id);
      }
      if (rng.uniform() < spec.sibling_rate) {
        // a confusable twin competing for the same slot
        const std::u32string base = utf8::decode(corpus_words_[pool.front()]);
        const EditType type = rng.uniform() < 0.5 ? EditType::Substitution : EditType::Transposition;
        for (int attempt = 0; attempt < 20; ++attempt) {
          const auto edited = detail::random_edit(base, type, 1, rng, table, 0.5);
          if (edited.size() < kMinWordLength || osa_distance(base, edited) != 1) continue;
          std::string word = utf8::encode(edited);
          if (is_affix(word) || !taken.insert(word).second) continue;
          pool.push_back(corpus_words_.size());
          corpus_words_.push_back(std::move(word));
          break;
        }
      }
      pattern.slots.push_back(std::move(pool));
    }
    patterns_.push_back(std::move(pattern));
  }

  for (const auto& w : corpus_words_) lexicon_.insert(w, "synthetic");
}

std::vector<std::string> SyntheticCorpus::sentences(std::size_t count, std::uint64_t seed) const {
  Rng rng(seed);
  std::vector<double> pattern_weights;
  for (const auto& p : patterns_) pattern_weights.push_back(p.weight);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Pattern& pattern = patterns_[rng.weighted(pattern_weights)];
    std::string line;
    for (const auto& pool : pattern.slots) {
      std::vector<double> weights;
      for (std::size_t j = 0; j < pool.size(); ++j) weights.push_back(1.0 / static_cast<double>(j + 1));
      if (!line.empty()) line.push_back(' ');
      line += corpus_words_[pool[rng.weighted(weights)]];
    }
    line.push_back('.');
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace spellkit
