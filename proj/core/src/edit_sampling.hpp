// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <string>

#include "spellkit/editops.hpp"
#include "spellkit/perto.hpp"
#include "spellkit/random.hpp"

namespace spellkit::detail {

/// Applies `distance` random operations of `type` to `word`. Substituted
/// characters come from the same PERTO group with probability
/// `confusable_rate`. The result can be degenerate (a swap of equal letters,
/// a substitution undone by a later one); callers re-check distance and type.
std::u32string random_edit(const std::u32string& word, EditType type, std::size_t distance, Rng& rng,
                           const PertoTable& table, double confusable_rate);

}  // namespace spellkit::detail
