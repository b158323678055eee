// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spellkit/editops.hpp"
#include "spellkit/lexicon.hpp"

namespace spellkit {

/// Deletion-neighborhood index over a lexicon. Every entry is registered under
/// the hashes of all its variants with up to `max_dist` characters deleted; a
/// query enumerates its own deletion variants, collects the entries sharing a
/// key and verifies them with the exact OSA distance. Immutable once built.
class CandidateIndex {
 public:
  CandidateIndex() = default;
  explicit CandidateIndex(const Lexicon& lexicon, std::size_t max_dist = kMaxEditDistance);

  /// Lexicon members within `max_dist` of `word`, excluding `word` itself,
  /// ordered by (distance, word). `max_dist` must be 1 or 2 and not exceed the
  /// bound the index was built with.
  std::vector<Candidate> generate(std::string_view word, std::size_t max_dist) const;

  bool contains(std::string_view word) const { return lexicon_.contains(word); }
  const Lexicon& lexicon() const noexcept { return lexicon_; }
  std::size_t max_dist() const noexcept { return max_dist_; }
  std::size_t key_count() const noexcept { return keys_.size(); }

  /// Versioned binary cache. load() throws ConfigError on version or lexicon
  /// hash mismatch.
  void save(const std::filesystem::path& path) const;
  static CandidateIndex load(const std::filesystem::path& path, const Lexicon& lexicon);
  /// Reuses `cache` when it matches the lexicon, otherwise rebuilds and rewrites it.
  static CandidateIndex load_or_build(const Lexicon& lexicon, const std::filesystem::path& cache,
                                      std::size_t max_dist = kMaxEditDistance);

 private:
  struct Key {
    std::uint64_t hash;
    std::uint32_t word_id;
    bool operator<(const Key& o) const noexcept {
      return hash != o.hash ? hash < o.hash : word_id < o.word_id;
    }
    bool operator==(const Key&) const = default;
  };

  Lexicon lexicon_;
  std::vector<std::string> words_;        // sorted lexicon entries
  std::vector<std::u32string> decoded_;   // same order as words_
  std::vector<Key> keys_;                 // sorted
  std::size_t max_dist_ = kMaxEditDistance;
};

/// Convenience wrapper matching the pipeline vocabulary.
inline std::vector<Candidate> generate_candidates(std::string_view word, const CandidateIndex& index,
                                                  std::size_t max_dist) {
  return index.generate(word, max_dist);
}

}  // namespace spellkit
