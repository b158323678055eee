// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/fourgram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "spellkit/errors.hpp"

namespace spellkit {
namespace {

constexpr std::string_view kMagic = "spellkit-fourgram";
constexpr int kFormatVersion = 1;
constexpr std::array<std::string_view, 2> kDirectionNames{"forward", "backward"};

std::string join(const std::vector<std::string_view>& parts) {
  std::string key;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) key.push_back(' ');
    key.append(parts[i]);
  }
  return key;
}

// Shortest text that parses back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

void FourGramWeights::validate() const {
  double sum = 0.0;
  for (double w : by_order) {
    if (!(w >= 0.0)) throw ConfigError("four-gram weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("four-gram weights must sum to 1");
  if (!(smoothing > 0.0)) throw ConfigError("four-gram smoothing constant must be positive");
}

FourGramModel FourGramModel::train(const std::vector<std::vector<std::string>>& sentences,
                                   const FourGramWeights& weights) {
  weights.validate();
  FourGramModel model;
  model.weights_ = weights;
  std::unordered_set<std::string> vocabulary;

  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    for (const auto& t : sentence) {
      if (t.empty() || t.find_first_of(" \t\n") != std::string::npos)
        throw InputError("four-gram tokens must be non-empty and free of whitespace");
      vocabulary.insert(t);
    }
    model.token_count_ += sentence.size();

    for (int dir = 0; dir < 2; ++dir) {
      std::vector<std::string_view> padded(3, dir == 0 ? kBeginMarker : kEndMarker);
      if (dir == 0) {
        padded.insert(padded.end(), sentence.begin(), sentence.end());
      } else {
        padded.insert(padded.end(), sentence.rbegin(), sentence.rend());
      }
      for (std::size_t p = 3; p < padded.size(); ++p) {
        for (std::size_t order = 1; order <= 4; ++order) {
          std::vector<std::string_view> gram(padded.begin() + static_cast<std::ptrdiff_t>(p + 1 - order),
                                             padded.begin() + static_cast<std::ptrdiff_t>(p + 1));
          ++model.ngrams_[dir][order - 1][join(gram)];
        }
      }
    }
  }
  if (model.token_count_ == 0) throw InputError("cannot train a four-gram model on an empty corpus");
  model.vocabulary_size_ = vocabulary.size();
  model.rebuild_context_counts();
  return model;
}

void FourGramModel::rebuild_context_counts() {
  for (auto& dir : contexts_)
    for (auto& table : dir) table.clear();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t order = 2; order <= 4; ++order) {
      for (const auto& [key, count] : ngrams_[dir][order - 1]) {
        contexts_[dir][order - 1][key.substr(0, key.rfind(' '))] += count;
      }
    }
  }
}

double FourGramModel::directional_probability(Direction direction,
                                              const std::vector<std::string>& context,
                                              std::string_view word) const {
  const int dir = static_cast<int>(direction);
  const std::string_view marker = direction == Direction::Forward ? kBeginMarker : kEndMarker;
  std::vector<std::string_view> ctx(3, marker);
  const std::size_t take = std::min<std::size_t>(3, context.size());
  for (std::size_t i = 0; i < take; ++i) ctx[3 - take + i] = context[context.size() - take + i];

  const double k = weights_.smoothing;
  const double v = static_cast<double>(vocabulary_size_ + 1);
  double total = 0.0;
  for (std::size_t order = 1; order <= 4; ++order) {
    std::vector<std::string_view> history(ctx.end() - static_cast<std::ptrdiff_t>(order - 1), ctx.end());
    std::string context_key = join(history);
    std::vector<std::string_view> gram = history;
    gram.push_back(word);
    const auto& grams = ngrams_[dir][order - 1];
    const auto it = grams.find(join(gram));
    const double joint = it == grams.end() ? 0.0 : static_cast<double>(it->second);
    double marginal = static_cast<double>(token_count_);
    if (order > 1) {
      const auto& ctxs = contexts_[dir][order - 1];
      const auto c = ctxs.find(context_key);
      marginal = c == ctxs.end() ? 0.0 : static_cast<double>(c->second);
    }
    total += weights_.by_order[order - 1] * (joint + k) / (marginal + k * v);
  }
  return total;
}

double FourGramModel::raw_score(const std::vector<std::string>& tokens, std::size_t position,
                                std::string_view word) const {
  std::vector<std::string> left, right;
  for (std::size_t back = 3; back >= 1; --back) {
    if (position >= back) left.push_back(tokens[position - back]);
  }
  for (std::size_t ahead = 3; ahead >= 1; --ahead) {
    if (position + ahead < tokens.size()) right.push_back(tokens[position + ahead]);
  }
  return 0.5 * directional_probability(Direction::Forward, left, word) +
         0.5 * directional_probability(Direction::Backward, right, word);
}

ScoreDistribution FourGramModel::score(const MaskedQuery& query) const {
  query.validate();
  std::map<std::string, double, std::less<>> raw;
  for (const auto& word : query.vocabulary) raw[word] = raw_score(query.tokens, query.mask_index, word);
  return ScoreDistribution::normalized(raw, query.vocabulary);
}

std::uint64_t FourGramModel::count(Direction direction, const std::vector<std::string>& ngram) const {
  if (ngram.empty() || ngram.size() > 4) return 0;
  std::vector<std::string_view> parts(ngram.begin(), ngram.end());
  const auto& table = ngrams_[static_cast<int>(direction)][ngram.size() - 1];
  const auto it = table.find(join(parts));
  return it == table.end() ? 0 : it->second;
}

void FourGramModel::save(std::ostream& out) const {
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "weights";
  for (double w : weights_.by_order) out << ' ' << shortest(w);
  out << "\nsmoothing " << shortest(weights_.smoothing) << '\n';
  out << "vocabulary " << vocabulary_size_ << '\n';
  out << "tokens " << token_count_ << '\n';
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t order = 1; order <= 4; ++order) {
      const auto& table = ngrams_[dir][order - 1];
      std::vector<std::pair<std::string_view, std::uint64_t>> rows(table.begin(), table.end());
      std::sort(rows.begin(), rows.end());
      out << "ngrams " << kDirectionNames[dir] << ' ' << order << ' ' << rows.size() << '\n';
      for (const auto& [key, count] : rows) out << key << '\t' << count << '\n';
    }
  }
}

void FourGramModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write four-gram model " + path.string());
  save(out);
}

FourGramModel FourGramModel::load(std::istream& in) {
  const auto fail = [](const std::string& why) -> ConfigError {
    return ConfigError("four-gram model: " + why);
  };
  FourGramModel model;
  std::string line;
  if (!std::getline(in, line)) throw fail("empty file");
  {
    std::istringstream header(line);
    std::string magic;
    int version = 0;
    header >> magic >> version;
    if (magic != kMagic) throw fail("missing header");
    if (version != kFormatVersion) throw fail("unsupported version " + std::to_string(version));
  }
  const auto keyed = [&](std::string_view key) {
    if (!std::getline(in, line)) throw fail("truncated header");
    std::istringstream fields(line);
    std::string name;
    fields >> name;
    if (name != key) throw fail("expected '" + std::string(key) + "'");
    return fields.str().substr(name.size());
  };
  {
    std::istringstream w(keyed("weights"));
    for (double& x : model.weights_.by_order)
      if (!(w >> x)) throw fail("bad weights");
  }
  if (!(std::istringstream(keyed("smoothing")) >> model.weights_.smoothing)) throw fail("bad smoothing");
  if (!(std::istringstream(keyed("vocabulary")) >> model.vocabulary_size_)) throw fail("bad vocabulary");
  if (!(std::istringstream(keyed("tokens")) >> model.token_count_)) throw fail("bad token count");
  model.weights_.validate();

  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t order = 1; order <= 4; ++order) {
      std::istringstream section(keyed("ngrams"));
      std::string direction;
      std::size_t section_order = 0, rows = 0;
      if (!(section >> direction >> section_order >> rows) || direction != kDirectionNames[dir] ||
          section_order != order)
        throw fail("unexpected section header");
      auto& table = model.ngrams_[dir][order - 1];
      table.reserve(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) throw fail("truncated n-gram table");
        const auto tab = line.rfind('\t');
        if (tab == std::string::npos) throw fail("n-gram record without count");
        const std::string key = line.substr(0, tab);
        if (static_cast<std::size_t>(std::count(key.begin(), key.end(), ' ')) != order - 1)
          throw fail("n-gram record of the wrong order");
        std::uint64_t count = 0;
        try {
          count = std::stoull(line.substr(tab + 1));
        } catch (const std::logic_error&) {
          throw fail("bad n-gram count");
        }
        table[key] = count;
      }
    }
  }
  model.rebuild_context_counts();
  return model;
}

FourGramModel FourGramModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open four-gram model " + path.string());
  return load(in);
}

bool operator==(const FourGramModel& a, const FourGramModel& b) {
  return a.weights_ == b.weights_ && a.vocabulary_size_ == b.vocabulary_size_ &&
         a.token_count_ == b.token_count_ && a.ngrams_ == b.ngrams_;
}

}  // namespace spellkit
