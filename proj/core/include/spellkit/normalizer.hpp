// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace spellkit {

inline constexpr char32_t kZwnj = U'\u200C';

/// Rule tables driving normalize(). Every table is plain data so alternative
/// codepoint sets can be audited and swapped without touching code.
struct NormalizationConfig {
  /// Arabic-script variant -> canonical Persian codepoint.
  std::map<char32_t, char32_t> character_map;
  /// Combining marks dropped outright.
  std::set<char32_t> diacritics;
  /// Elongation characters dropped outright.
  std::set<char32_t> kashida;
  /// "PREFIX word" -> "PREFIX<ZWNJ>word".
  std::vector<std::u32string> joining_prefixes;
  /// "word SUFFIX" -> "word<ZWNJ>SUFFIX".
  std::vector<std::u32string> joining_suffixes;

  bool map_characters = true;
  bool remove_diacritics = true;
  bool remove_kashida = true;
  bool repair_pseudo_space = true;

  static NormalizationConfig defaults();
  /// Loads the JSON form documented in docs/normalizer-config.md. Throws ConfigError.
  static NormalizationConfig load(const std::filesystem::path& path);
  static NormalizationConfig from_json(std::string_view json_text);
  std::string to_json() const;

  /// Rejects tables that would break idempotence (a mapping target that is itself
  /// mapped or removed, an affix containing removed characters, ...).
  void validate() const;
};

struct NormalizedText {
  std::string content;
  /// Identifiers of the rule families that changed at least one character.
  std::vector<std::string> applied_rules;
};

/// Throws DecodeError on invalid UTF-8.
NormalizedText normalize(std::string_view raw, const NormalizationConfig& config);

enum class TokenKind { Word, PassThrough };

struct Span {
  std::size_t begin = 0;  // byte offsets into the normalized text
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

struct Token {
  std::string surface;
  std::size_t index = 0;
  Span span;
  TokenKind kind = TokenKind::Word;

  bool is_word() const noexcept { return kind == TokenKind::Word; }
};

struct Sentence {
  std::string text;
  Span span;
  std::vector<Token> tokens;
};

/// Splits on . ! ? ؟ ۔ (a '.' between two digits is a decimal point, not a
/// delimiter). Segments that yield no tokens are dropped. Token spans are
/// relative to `text`, not to the sentence.
std::vector<Sentence> segment_sentences(std::string_view text);
inline std::vector<Sentence> segment_sentences(const NormalizedText& text) {
  return segment_sentences(text.content);
}

/// Treats the whole input as one sentence; returns an empty sentence when no
/// token is found.
Sentence make_sentence(std::string_view text, std::size_t base_offset = 0);

/// Whitespace separates tokens; punctuation separates and is discarded; ZWNJ
/// stays inside tokens. Spans are `base_offset` + byte offset in `sentence_text`.
std::vector<Token> tokenize(std::string_view sentence_text, std::size_t base_offset = 0);

namespace chars {
bool is_word_letter(char32_t c) noexcept;   // Arabic-script letters and marks, ZWNJ/ZWJ
bool is_digit(char32_t c) noexcept;         // ASCII, Arabic-Indic and Persian digits
bool is_whitespace(char32_t c) noexcept;
bool is_horizontal_space(char32_t c) noexcept;
bool is_punctuation(char32_t c) noexcept;
bool is_sentence_delimiter(char32_t c) noexcept;
}  // namespace chars

}  // namespace spellkit
