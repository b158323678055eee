// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace spellkit {

enum class EditType { Substitution, Insertion, Deletion, Transposition, Mixed };

std::string_view to_string(EditType type) noexcept;
/// Accepts the names produced by to_string (case-insensitive). Throws InputError.
EditType parse_edit_type(std::string_view name);

/// Optimal string alignment distance (restricted Damerau-Levenshtein): unit-cost
/// insertion, deletion, substitution and adjacent transposition, no substring
/// edited twice. Operates on codepoints.
std::size_t osa_distance(std::u32string_view a, std::u32string_view b);
std::size_t osa_distance(std::string_view a, std::string_view b);

/// osa_distance when it is <= max, nullopt otherwise. Cheaper than the full
/// distance for small bounds.
std::optional<std::size_t> osa_distance_within(std::u32string_view a, std::u32string_view b,
                                               std::size_t max);

/// Edit type turning `original` into `variant`. Insertion means `variant` is
/// longer. At distance 2 a homogeneous type is reported when some optimal
/// alignment uses only that operation, otherwise Mixed. Throws ContractError
/// unless the distance is 1 or 2.
EditType classify_edit(std::u32string_view original, std::u32string_view variant);
EditType classify_edit(std::string_view original, std::string_view variant);

/// A lexicon word proposed as a replacement. Score and PERTO flag are filled by
/// the correction stage.
struct Candidate {
  std::string word;
  std::size_t distance = 0;
  EditType edit_type = EditType::Substitution;
  std::optional<double> contextual_score;
  std::optional<bool> perto_match;

  bool operator==(const Candidate&) const = default;
};

inline constexpr std::size_t kMaxEditDistance = 2;

}  // namespace spellkit
