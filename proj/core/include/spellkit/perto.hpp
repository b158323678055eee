// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spellkit {

/// Groups of visually confusable Persian letters sharing one code symbol.
class PertoTable {
 public:
  struct Group {
    char32_t code;
    std::u32string characters;
  };

  /// The fourteen groups (codes 0-9, A-D) over the Persian alphabet.
  static const PertoTable& standard();
  /// JSON: {"groups": [{"code": "0", "characters": "اآ"}, ...]}. Throws ConfigError.
  static PertoTable load(const std::filesystem::path& path);
  static PertoTable from_json(std::string_view json_text);
  /// Throws ConfigError when a character is listed twice or codes collide.
  static PertoTable from_groups(std::vector<Group> groups);

  /// Code symbol of `c`; characters outside the table map to themselves.
  char32_t code_of(char32_t c) const noexcept;
  bool maps(char32_t c) const noexcept { return codes_.contains(c); }

  const std::vector<Group>& groups() const noexcept { return groups_; }
  /// Every character of every group, in table order.
  std::u32string alphabet() const;
  std::string to_json() const;

 private:
  std::vector<Group> groups_;
  std::unordered_map<char32_t, char32_t> codes_;
};

/// Per-character code of `word`, in logical order; same length as `word`.
std::u32string perto_code(std::u32string_view word, const PertoTable& table = PertoTable::standard());
std::string perto_code(std::string_view word, const PertoTable& table = PertoTable::standard());

/// True iff both words have identical codes (so never for different lengths).
bool perto_match(std::u32string_view a, std::u32string_view b,
                 const PertoTable& table = PertoTable::standard());
bool perto_match(std::string_view a, std::string_view b,
                 const PertoTable& table = PertoTable::standard());

}  // namespace spellkit
