// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/editops.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>
#include <vector>

#include "spellkit/errors.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {

std::string_view to_string(EditType type) noexcept {
  switch (type) {
    case EditType::Substitution: return "substitution";
    case EditType::Insertion: return "insertion";
    case EditType::Deletion: return "deletion";
    case EditType::Transposition: return "transposition";
    case EditType::Mixed: return "mixed";
  }
  return "mixed";
}

EditType parse_edit_type(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto t : {EditType::Substitution, EditType::Insertion, EditType::Deletion,
                 EditType::Transposition, EditType::Mixed}) {
    if (to_string(t) == lower) return t;
  }
  throw InputError("unknown edit type '" + std::string(name) + "'");
}

std::size_t osa_distance(std::u32string_view a, std::u32string_view b) {
  const std::size_t n = a.size(), m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  // Rows i-2, i-1, i.
  std::vector<std::size_t> two(m + 1), one(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) one[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      std::size_t d = std::min({one[j] + 1, cur[j - 1] + 1, one[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
        d = std::min(d, two[j - 2] + 1);
      cur[j] = d;
    }
    std::swap(two, one);
    std::swap(one, cur);
  }
  return one[m];
}

std::size_t osa_distance(std::string_view a, std::string_view b) {
  return osa_distance(utf8::decode(a), utf8::decode(b));
}

std::optional<std::size_t> osa_distance_within(std::u32string_view a, std::u32string_view b,
                                               std::size_t max) {
  const std::size_t n = a.size(), m = b.size();
  if ((n > m ? n - m : m - n) > max) return std::nullopt;
  if (n == 0 || m == 0) return std::max(n, m);
  std::vector<std::size_t> two(m + 1), one(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) one[j] = j;
  std::size_t previous_min = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    std::size_t row_min = cur[0];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      std::size_t d = std::min({one[j] + 1, cur[j - 1] + 1, one[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
        d = std::min(d, two[j - 2] + 1);
      cur[j] = d;
      row_min = std::min(row_min, d);
    }
    // Every later cell derives from the last two rows.
    if (row_min > max && previous_min > max) return std::nullopt;
    previous_min = row_min;
    std::swap(two, one);
    std::swap(one, cur);
  }
  if (one[m] > max) return std::nullopt;
  return one[m];
}

namespace {

constexpr unsigned bit(EditType t) { return 1u << static_cast<unsigned>(t); }

// Walks every optimal alignment of the full OSA matrix and records the set of
// operation types each one uses.
class AlignmentWalker {
 public:
  AlignmentWalker(std::u32string_view a, std::u32string_view b) : a_(a), b_(b) {
    const std::size_t n = a.size(), m = b.size();
    d_.assign(n + 1, std::vector<std::size_t>(m + 1));
    for (std::size_t i = 0; i <= n; ++i) d_[i][0] = i;
    for (std::size_t j = 0; j <= m; ++j) d_[0][j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= m; ++j) {
        const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
        std::size_t v = std::min({d_[i - 1][j] + 1, d_[i][j - 1] + 1, d_[i - 1][j - 1] + cost});
        if (transposable(i, j)) v = std::min(v, d_[i - 2][j - 2] + 1);
        d_[i][j] = v;
      }
    }
  }

  std::size_t distance() const { return d_[a_.size()][b_.size()]; }

  std::set<unsigned> type_sets() {
    walk(a_.size(), b_.size(), 0);
    return found_;
  }

 private:
  bool transposable(std::size_t i, std::size_t j) const {
    return i > 1 && j > 1 && a_[i - 1] == b_[j - 2] && a_[i - 2] == b_[j - 1] &&
           a_[i - 1] != a_[i - 2];
  }

  void walk(std::size_t i, std::size_t j, unsigned mask) {
    if (!visited_.insert({i, j, mask}).second) return;
    if (i == 0 && j == 0) {
      found_.insert(mask);
      return;
    }
    const std::size_t here = d_[i][j];
    if (i > 0 && j > 0) {
      if (a_[i - 1] == b_[j - 1]) {
        if (d_[i - 1][j - 1] == here) walk(i - 1, j - 1, mask);
      } else if (d_[i - 1][j - 1] + 1 == here) {
        walk(i - 1, j - 1, mask | bit(EditType::Substitution));
      }
    }
    if (i > 0 && d_[i - 1][j] + 1 == here) walk(i - 1, j, mask | bit(EditType::Deletion));
    if (j > 0 && d_[i][j - 1] + 1 == here) walk(i, j - 1, mask | bit(EditType::Insertion));
    if (transposable(i, j) && d_[i - 2][j - 2] + 1 == here)
      walk(i - 2, j - 2, mask | bit(EditType::Transposition));
  }

  std::u32string_view a_, b_;
  std::vector<std::vector<std::size_t>> d_;
  std::set<std::tuple<std::size_t, std::size_t, unsigned>> visited_;
  std::set<unsigned> found_;
};

}  // namespace

EditType classify_edit(std::u32string_view original, std::u32string_view variant) {
  AlignmentWalker walker(original, variant);
  const std::size_t d = walker.distance();
  if (d < 1 || d > kMaxEditDistance)
    throw ContractError("classify_edit requires distance 1 or 2, got " + std::to_string(d));
  const auto sets = walker.type_sets();
  for (auto t : {EditType::Substitution, EditType::Insertion, EditType::Deletion,
                 EditType::Transposition}) {
    if (sets.contains(bit(t))) return t;
  }
  return EditType::Mixed;
}

EditType classify_edit(std::string_view original, std::string_view variant) {
  return classify_edit(utf8::decode(original), utf8::decode(variant));
}

}  // namespace spellkit
