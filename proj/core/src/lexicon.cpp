// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "spellkit/errors.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

bool Lexicon::insert(std::string word, std::string_view source_name) {
  const bool inserted = entries_.insert(std::move(word)).second;
  if (inserted) ++source_counts_[std::string(source_name)];
  return inserted;
}

Lexicon Lexicon::load(std::istream& in, std::string_view source_name,
                      const NormalizationConfig& config) {
  Lexicon lex;
  lex.source_counts_[std::string(source_name)] = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!utf8::is_valid(line)) {
      throw DecodeError("malformed UTF-8 in word list '" + std::string(source_name) + "' at line " +
                            std::to_string(line_no),
                        0, line_no);
    }
    const auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    auto normalized = normalize(word, config).content;
    if (!normalized.empty()) lex.insert(std::move(normalized), source_name);
  }
  return lex;
}

Lexicon Lexicon::load_file(const std::filesystem::path& path, const NormalizationConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open lexicon " + path.string());
  return load(in, path.filename().string(), config);
}

Lexicon Lexicon::build_from_corpus(std::istream& corpus, std::string_view source_name,
                                   const NormalizationConfig& config) {
  Lexicon lex;
  lex.source_counts_[std::string(source_name)] = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(corpus, line)) {
    ++line_no;
    NormalizedText text;
    try {
      text = normalize(line, config);
    } catch (const DecodeError& e) {
      throw DecodeError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")",
                        e.byte_offset(), line_no);
    }
    for (const auto& sentence : segment_sentences(text))
      for (const auto& token : sentence.tokens)
        if (token.is_word()) lex.insert(token.surface, source_name);
  }
  return lex;
}

std::vector<std::string> Lexicon::sorted_entries() const {
  std::vector<std::string> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t Lexicon::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& word : sorted_entries()) {
    for (unsigned char c : word) mix(c);
    mix('\n');
  }
  return h;
}

void Lexicon::save(std::ostream& out) const {
  for (const auto& word : sorted_entries()) out << word << '\n';
}

Lexicon merge(const Lexicon& general, const Lexicon& specialized) {
  Lexicon merged;
  for (const auto& w : general.entries()) merged.entries_.insert(w);
  for (const auto& w : specialized.entries()) merged.entries_.insert(w);
  merged.source_counts_ = general.source_counts();
  for (const auto& [name, count] : specialized.source_counts()) {
    auto& slot = merged.source_counts_[name];
    slot = std::max(slot, count);
  }
  return merged;
}

}  // namespace spellkit
