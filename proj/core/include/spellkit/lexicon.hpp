// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "spellkit/normalizer.hpp"

namespace spellkit {

namespace detail {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};
}  // namespace detail

/// Reference dictionary. Every entry is normalizer-canonical and membership is
/// exact string equality over a hash set.
class Lexicon {
 public:
  using EntrySet = std::unordered_set<std::string, detail::StringHash, std::equal_to<>>;

  Lexicon() = default;

  /// One word per line; '#' comment lines and blank lines skipped. Each word
  /// is normalized before insertion. Throws DecodeError carrying the line number.
  static Lexicon load(std::istream& in, std::string_view source_name,
                      const NormalizationConfig& config);
  static Lexicon load_file(const std::filesystem::path& path, const NormalizationConfig& config);

  /// Collects every Word-kind token of a raw corpus (normalized, segmented, tokenized).
  static Lexicon build_from_corpus(std::istream& corpus, std::string_view source_name,
                                   const NormalizationConfig& config);

  bool contains(std::string_view word) const { return entries_.find(word) != entries_.end(); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Inserts an already canonical word; returns false when it was present.
  bool insert(std::string word, std::string_view source_name = "manual");

  const EntrySet& entries() const noexcept { return entries_; }
  /// Words newly contributed by each source, in load order of the sources.
  const std::map<std::string, std::size_t>& source_counts() const noexcept { return source_counts_; }

  std::vector<std::string> sorted_entries() const;
  /// FNV-1a 64 over the sorted entries; stable across runs and platforms.
  std::uint64_t content_hash() const;

  void save(std::ostream& out) const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.entries_ == b.entries_; }
  friend Lexicon merge(const Lexicon& general, const Lexicon& specialized);

 private:
  EntrySet entries_;
  std::map<std::string, std::size_t> source_counts_;
};

/// Set union. Source tallies are carried over per source name.
Lexicon merge(const Lexicon& general, const Lexicon& specialized);

}  // namespace spellkit
