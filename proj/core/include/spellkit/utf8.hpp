// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace spellkit::utf8 {

/// Decodes strict UTF-8 (no overlongs, no surrogates). Throws DecodeError.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

bool is_valid(std::string_view bytes) noexcept;

/// Number of codepoints; input must be valid.
std::size_t length(std::string_view bytes);

/// Reads one codepoint starting at `pos` and advances it. Input must be valid.
char32_t next(std::string_view bytes, std::size_t& pos);

}  // namespace spellkit::utf8
