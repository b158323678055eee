// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/candidate_index.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "spellkit/errors.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {
namespace {

constexpr std::array<char, 8> kMagic{'S', 'P', 'K', 'I', 'D', 'X', '\0', '\0'};
constexpr std::uint32_t kFormatVersion = 1;

std::uint64_t hash_chars(std::u32string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
  for (char32_t c : s) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 0x100000001b3ULL;
  }
  // splitmix64 finalizer
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Hashes of `word` and of every string obtained by deleting up to `depth`
// characters from it, deduplicated.
std::vector<std::uint64_t> deletion_hashes(const std::u32string& word, std::size_t depth) {
  std::vector<std::u32string> frontier{word};
  std::vector<std::uint64_t> hashes{hash_chars(word)};
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<std::u32string> next;
    for (const auto& s : frontier) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        // Deleting any char of a run gives the same string; keep the first.
        if (i > 0 && s[i] == s[i - 1]) continue;
        std::u32string shorter = s;
        shorter.erase(i, 1);
        next.push_back(std::move(shorter));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (const auto& s : next) hashes.push_back(hash_chars(s));
    frontier = std::move(next);
  }
  std::sort(hashes.begin(), hashes.end());
  hashes.erase(std::unique(hashes.begin(), hashes.end()), hashes.end());
  return hashes;
}

template <typename T>
void write_le(std::ostream& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((value >> (8 * i)) & 0xFF));
}

template <typename T>
T read_le(std::istream& in) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw ConfigError("truncated candidate index cache");
    value |= static_cast<T>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return value;
}

void check_max_dist(std::size_t max_dist) {
  if (max_dist < 1 || max_dist > kMaxEditDistance)
    throw ContractError("max_dist must be 1 or 2, got " + std::to_string(max_dist));
}

}  // namespace

CandidateIndex::CandidateIndex(const Lexicon& lexicon, std::size_t max_dist)
    : lexicon_(lexicon), words_(lexicon.sorted_entries()), max_dist_(max_dist) {
  check_max_dist(max_dist);
  decoded_.reserve(words_.size());
  for (const auto& w : words_) decoded_.push_back(utf8::decode(w));
  for (std::uint32_t id = 0; id < decoded_.size(); ++id) {
    for (std::uint64_t h : deletion_hashes(decoded_[id], max_dist_)) keys_.push_back({h, id});
  }
  std::sort(keys_.begin(), keys_.end());
}

std::vector<Candidate> CandidateIndex::generate(std::string_view word, std::size_t max_dist) const {
  check_max_dist(max_dist);
  if (max_dist > max_dist_)
    throw ContractError("index was built for distance " + std::to_string(max_dist_));

  const std::u32string query = utf8::decode(word);
  std::vector<std::uint32_t> ids;
  for (std::uint64_t h : deletion_hashes(query, max_dist)) {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), Key{h, 0});
    for (; it != keys_.end() && it->hash == h; ++it) ids.push_back(it->word_id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<Candidate> out;
  for (std::uint32_t id : ids) {
    const auto& entry = decoded_[id];
    const auto d = osa_distance_within(query, entry, max_dist);
    if (!d || *d == 0) continue;
    Candidate c;
    c.word = words_[id];
    c.distance = *d;
    c.edit_type = classify_edit(query, entry);
    out.push_back(std::move(c));
  }
  // ids follow sorted word order, so a stable sort on distance keeps words sorted.
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& x, const Candidate& y) { return x.distance < y.distance; });
  return out;
}

void CandidateIndex::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write candidate index cache " + path.string());
  out.write(kMagic.data(), kMagic.size());
  write_le<std::uint32_t>(out, kFormatVersion);
  write_le<std::uint64_t>(out, lexicon_.content_hash());
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(max_dist_));
  write_le<std::uint64_t>(out, keys_.size());
  for (const auto& k : keys_) {
    write_le<std::uint64_t>(out, k.hash);
    write_le<std::uint32_t>(out, k.word_id);
  }
  if (!out) throw ConfigError("failed writing candidate index cache " + path.string());
}

CandidateIndex CandidateIndex::load(const std::filesystem::path& path, const Lexicon& lexicon) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open candidate index cache " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw ConfigError("not a candidate index cache: " + path.string());
  if (read_le<std::uint32_t>(in) != kFormatVersion)
    throw ConfigError("unsupported candidate index cache version");
  if (read_le<std::uint64_t>(in) != lexicon.content_hash())
    throw ConfigError("candidate index cache does not match the lexicon");

  CandidateIndex index;
  index.max_dist_ = read_le<std::uint32_t>(in);
  check_max_dist(index.max_dist_);
  index.lexicon_ = lexicon;
  index.words_ = lexicon.sorted_entries();
  index.decoded_.reserve(index.words_.size());
  for (const auto& w : index.words_) index.decoded_.push_back(utf8::decode(w));
  const auto count = read_le<std::uint64_t>(in);
  index.keys_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Key k;
    k.hash = read_le<std::uint64_t>(in);
    k.word_id = read_le<std::uint32_t>(in);
    if (k.word_id >= index.words_.size()) throw ConfigError("corrupt candidate index cache");
    index.keys_.push_back(k);
  }
  return index;
}

CandidateIndex CandidateIndex::load_or_build(const Lexicon& lexicon,
                                             const std::filesystem::path& cache,
                                             std::size_t max_dist) {
  if (std::filesystem::exists(cache)) {
    try {
      auto index = load(cache, lexicon);
      if (index.max_dist() >= max_dist) return index;
    } catch (const ConfigError&) {
      // stale or damaged; rebuilt below
    }
  }
  CandidateIndex index(lexicon, max_dist);
  index.save(cache);
  return index;
}

}  // namespace spellkit
