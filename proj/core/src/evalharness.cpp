// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/evalharness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "edit_sampling.hpp"
#include "spellkit/errors.hpp"
#include "spellkit/normalizer.hpp"
#include "spellkit/random.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 2> kDistanceKeys{"1", "2"};

void read_class(const json& j, ClassInjection& out, const std::string& name) {
  if (!j.is_object()) throw ConfigError(name + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "rate_per_10k") {
      out.rate_per_10k = value.get<double>();
    } else if (key == "type_mix") {
      out.type_mix.fill(0.0);
      for (const auto& [type, share] : value.items()) {
        const EditType t = parse_edit_type(type);
        const auto it = std::find(kInjectableEditTypes.begin(), kInjectableEditTypes.end(), t);
        if (it == kInjectableEditTypes.end()) throw ConfigError("cannot inject edit type " + type);
        out.type_mix[static_cast<std::size_t>(it - kInjectableEditTypes.begin())] = share.get<double>();
      }
    } else if (key == "distance_mix") {
      out.distance_mix.fill(0.0);
      for (const auto& [d, share] : value.items()) {
        const auto it = std::find(kDistanceKeys.begin(), kDistanceKeys.end(), d);
        if (it == kDistanceKeys.end()) throw ConfigError("injectable distances are 1 and 2, not " + d);
        out.distance_mix[static_cast<std::size_t>(it - kDistanceKeys.begin())] = share.get<double>();
      }
    } else {
      throw ConfigError("unknown key '" + key + "' in " + name);
    }
  }
}

json write_class(const ClassInjection& c) {
  json types = json::object();
  for (std::size_t i = 0; i < kInjectableEditTypes.size(); ++i)
    types[std::string(to_string(kInjectableEditTypes[i]))] = c.type_mix[i];
  json distances = json::object();
  for (std::size_t i = 0; i < kDistanceKeys.size(); ++i)
    distances[std::string(kDistanceKeys[i])] = c.distance_mix[i];
  return {{"rate_per_10k", c.rate_per_10k}, {"type_mix", types}, {"distance_mix", distances}};
}

template <std::size_t N>
void normalize_mix(std::array<double, N>& mix, const std::string& name) {
  double sum = 0.0;
  for (double v : mix) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(name + " proportions must be non-negative");
    sum += v;
  }
  if (!(sum > 0.0)) throw ConfigError(name + " proportions are all zero");
  for (double& v : mix) v /= sum;
}

std::string class_label(ErrorClass c, EditType t, std::size_t d) {
  std::ostringstream s;
  s << to_string(c) << ' ' << to_string(t) << " at distance " << d;
  return s.str();
}

}  // namespace

namespace detail {

std::u32string random_edit(const std::u32string& word, EditType type, std::size_t distance,
                           Rng& rng, const PertoTable& table, double confusable_rate) {
  const std::u32string alphabet = table.alphabet();
  const auto random_letter = [&] { return alphabet[rng.below(alphabet.size())]; };
  std::u32string out = word;
  switch (type) {
    case EditType::Substitution: {
      std::set<std::size_t> positions;
      while (positions.size() < std::min(distance, out.size())) positions.insert(rng.below(out.size()));
      for (std::size_t p : positions) {
        const char32_t original = out[p];
        std::u32string pool;
        if (rng.uniform() < confusable_rate && table.maps(original)) {
          for (const auto& g : table.groups())
            if (g.code == table.code_of(original))
              for (char32_t c : g.characters)
                if (c != original) pool.push_back(c);
        }
        if (pool.empty()) {
          for (char32_t c : alphabet)
            if (c != original) pool.push_back(c);
        }
        out[p] = pool[rng.below(pool.size())];
      }
      break;
    }
    case EditType::Insertion:
      for (std::size_t i = 0; i < distance; ++i) out.insert(out.begin() + static_cast<std::ptrdiff_t>(rng.below(out.size() + 1)), random_letter());
      break;
    case EditType::Deletion:
      for (std::size_t i = 0; i < distance && !out.empty(); ++i)
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(rng.below(out.size())));
      break;
    case EditType::Transposition: {
      if (out.size() < 2) break;
      const std::size_t first = rng.below(out.size() - 1);
      std::swap(out[first], out[first + 1]);
      if (distance == 2) {
        // a second swap that does not overlap the first
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i + 1 < out.size(); ++i)
          if (i + 1 < first || i > first + 1) free.push_back(i);
        if (free.empty()) break;
        const std::size_t second = free[rng.below(free.size())];
        std::swap(out[second], out[second + 1]);
      }
      break;
    }
    case EditType::Mixed:
      break;
  }
  return out;
}

}  // namespace detail

InjectionSpec InjectionSpec::defaults() {
  InjectionSpec s;
  s.non_word = {120.0, {49.1, 30.3, 13.8, 6.8}, {86.4, 14.0}};
  s.real_word = {29.0, {47.8, 31.4, 13.5, 7.3}, {85.5, 12.6}};
  s.normalize_and_validate();
  return s;
}

void InjectionSpec::normalize_and_validate() {
  for (auto* c : {&non_word, &real_word}) {
    if (!(c->rate_per_10k >= 0.0) || !std::isfinite(c->rate_per_10k))
      throw ConfigError("injection rates must be non-negative");
    normalize_mix(c->type_mix, "type_mix");
    normalize_mix(c->distance_mix, "distance_mix");
  }
  if (non_word.rate_per_10k + real_word.rate_per_10k > 10'000.0)
    throw ConfigError("combined injection rate exceeds one error per sentence");
  if (!(confusable_substitution_rate >= 0.0 && confusable_substitution_rate <= 1.0))
    throw ConfigError("confusable_substitution_rate must lie in [0, 1]");
  if (max_attempts == 0) throw ConfigError("max_attempts must be positive");
}

InjectionSpec InjectionSpec::from_json(std::string_view json_text) {
  InjectionSpec s = defaults();
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw ConfigError("injection spec must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "non_word") read_class(value, s.non_word, key);
      else if (key == "real_word") read_class(value, s.real_word, key);
      else if (key == "confusable_substitution_rate") s.confusable_substitution_rate = value.get<double>();
      else if (key == "max_attempts") s.max_attempts = value.get<std::size_t>();
      else if (key == "seed") s.seed = value.get<std::uint64_t>();
      else throw ConfigError("unknown key '" + key + "' in injection spec");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("injection spec: ") + e.what());
  } catch (const InputError& e) {
    throw ConfigError(std::string("injection spec: ") + e.what());
  }
  s.normalize_and_validate();
  return s;
}

InjectionSpec InjectionSpec::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open injection spec " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string InjectionSpec::to_json() const {
  json j{{"non_word", write_class(non_word)},
         {"real_word", write_class(real_word)},
         {"confusable_substitution_rate", confusable_substitution_rate},
         {"max_attempts", max_attempts},
         {"seed", seed}};
  return j.dump(2);
}

std::string GoldRecord::to_json() const {
  json j{{"sentence_id", sentence_id},
         {"token_index", token_index},
         {"original", original},
         {"corrupted", corrupted},
         {"error_class", to_string(error_class)},
         {"edit_type", to_string(edit_type)},
         {"distance", distance}};
  return j.dump();
}

GoldRecord GoldRecord::from_json(std::string_view line) {
  try {
    const json j = json::parse(line);
    GoldRecord g;
    g.sentence_id = j.at("sentence_id").get<std::size_t>();
    g.token_index = j.at("token_index").get<std::size_t>();
    g.original = j.at("original").get<std::string>();
    g.corrupted = j.at("corrupted").get<std::string>();
    g.error_class = parse_error_class(j.at("error_class").get<std::string>());
    g.edit_type = parse_edit_type(j.at("edit_type").get<std::string>());
    g.distance = j.at("distance").get<std::size_t>();
    return g;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed gold record: ") + e.what());
  }
}

InjectionResult inject_errors(const std::vector<std::string>& corpus, const InjectionSpec& spec_in,
                              const CandidateIndex& index, const PertoTable& table) {
  InjectionSpec spec = spec_in;
  spec.normalize_and_validate();
  const Lexicon& lexicon = index.lexicon();
  const NormalizationConfig normalizer = NormalizationConfig::defaults();
  Rng rng(spec.seed);
  InjectionResult result;
  result.corpus.reserve(corpus.size());

  for (std::size_t sid = 0; sid < corpus.size(); ++sid) {
    const std::string& line = corpus[sid];
    const double draw = rng.uniform() * 10'000.0;
    std::optional<ErrorClass> cls;
    if (draw < spec.non_word.rate_per_10k) cls = ErrorClass::NonWord;
    else if (draw < spec.non_word.rate_per_10k + spec.real_word.rate_per_10k) cls = ErrorClass::RealWord;
    if (!cls) {
      result.corpus.push_back(line);
      continue;
    }
    const ClassInjection& mix = *cls == ErrorClass::NonWord ? spec.non_word : spec.real_word;
    const EditType type = kInjectableEditTypes[rng.weighted(mix.type_mix)];
    const std::size_t distance = rng.weighted(mix.distance_mix) + 1;

    const std::vector<Token> tokens = tokenize(line);
    std::vector<std::size_t> eligible;
    for (const auto& t : tokens)
      if (t.is_word() && lexicon.contains(t.surface)) eligible.push_back(t.index);

    std::optional<GoldRecord> gold;
    std::string corrupted_line;
    for (std::size_t attempt = 0; attempt < spec.max_attempts && !gold && !eligible.empty(); ++attempt) {
      const Token& token = tokens[eligible[rng.below(eligible.size())]];
      std::string corrupted;
      if (*cls == ErrorClass::NonWord) {
        const std::u32string word = utf8::decode(token.surface);
        const std::u32string edited =
            detail::random_edit(word, type, distance, rng, table, spec.confusable_substitution_rate);
        if (edited.empty() || osa_distance(word, edited) != distance || classify_edit(word, edited) != type)
          continue;
        corrupted = utf8::encode(edited);
        if (lexicon.contains(corrupted)) continue;
      } else {
        std::vector<Candidate> pool;
        for (auto& c : index.generate(token.surface, distance))
          if (c.distance == distance && c.edit_type == type) pool.push_back(std::move(c));
        if (pool.empty()) continue;
        if (type == EditType::Substitution && rng.uniform() < spec.confusable_substitution_rate) {
          std::vector<Candidate> confusable;
          for (const auto& c : pool)
            if (perto_match(std::string_view(c.word), std::string_view(token.surface), table))
              confusable.push_back(c);
          if (!confusable.empty()) pool = std::move(confusable);
        }
        corrupted = pool[rng.below(pool.size())].word;
      }
      // an edit that the normalizer would rewrite (e.g. a new pseudo-space
      // affix) would shift token positions downstream
      std::string spliced = line.substr(0, token.span.begin) + corrupted + line.substr(token.span.end);
      if (normalize(spliced, normalizer).content != spliced) continue;
      gold = GoldRecord{sid, token.index, token.surface, corrupted, *cls, type, distance};
      corrupted_line = std::move(spliced);
    }

    if (!gold) {
      result.warnings.push_back("sentence " + std::to_string(sid) + ": no " + class_label(*cls, type, distance) +
                                " error could be injected; skipped");
      result.corpus.push_back(line);
      continue;
    }
    result.corpus.push_back(std::move(corrupted_line));
    result.gold.push_back(std::move(*gold));
  }
  return result;
}

std::string_view to_string(EvalTask task) noexcept {
  switch (task) {
    case EvalTask::NonWordDetection: return "non_word_detection";
    case EvalTask::NonWordCorrection: return "non_word_correction";
    case EvalTask::RealWordDetection: return "real_word_detection";
    case EvalTask::RealWordCorrection: return "real_word_correction";
  }
  return "non_word_correction";
}

EvalTask parse_eval_task(std::string_view name) {
  for (auto t : {EvalTask::NonWordDetection, EvalTask::NonWordCorrection, EvalTask::RealWordDetection,
                 EvalTask::RealWordCorrection})
    if (to_string(t) == name) return t;
  throw InputError("unknown evaluation task '" + std::string(name) + "'");
}

double f1_score(double precision, double recall) noexcept {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

Metrics Metrics::from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  Metrics m;
  m.true_positives = tp;
  m.false_positives = fp;
  m.false_negatives = fn;
  m.precision = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  m.recall = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f1 = f1_score(m.precision, m.recall);
  return m;
}

Metrics evaluate(const std::vector<Prediction>& predictions, const std::vector<GoldRecord>& gold,
                 EvalTask task, const EvalFilter& filter) {
  std::map<std::size_t, const GoldRecord*> gold_by_id;
  for (const auto& g : gold)
    if (!gold_by_id.emplace(g.sentence_id, &g).second)
      throw InputError("duplicate sentence_id " + std::to_string(g.sentence_id) + " in gold records");
  std::map<std::size_t, const Prediction*> pred_by_id;
  for (const auto& p : predictions)
    if (!pred_by_id.emplace(p.sentence_id, &p).second)
      throw InputError("duplicate sentence_id " + std::to_string(p.sentence_id) + " in predictions");

  const ErrorClass cls = task == EvalTask::NonWordDetection || task == EvalTask::NonWordCorrection
                             ? ErrorClass::NonWord
                             : ErrorClass::RealWord;
  const bool correction = task == EvalTask::NonWordCorrection || task == EvalTask::RealWordCorrection;

  const auto in_scope = [&](std::size_t sid) {
    if (!filter.edit_type) return true;
    const auto it = gold_by_id.find(sid);
    return it != gold_by_id.end() && it->second->edit_type == *filter.edit_type;
  };
  const auto relevant_gold = [&](std::size_t sid) -> const GoldRecord* {
    const auto it = gold_by_id.find(sid);
    if (it == gold_by_id.end() || it->second->error_class != cls || !in_scope(sid)) return nullptr;
    return it->second;
  };

  std::size_t tp = 0, fp = 0, fn = 0;
  for (const auto& [sid, p] : pred_by_id) {
    if (p->error_class != cls || !in_scope(sid)) continue;
    if (correction && !p->replacement) continue;
    const GoldRecord* g = relevant_gold(sid);
    const bool hit = g && g->token_index == p->token_index && (!correction || *p->replacement == g->original);
    if (hit) ++tp;
    else ++fp;
  }
  for (const auto& [sid, g] : gold_by_id) {
    if (!relevant_gold(sid)) continue;
    const auto it = pred_by_id.find(sid);
    const Prediction* p = it == pred_by_id.end() ? nullptr : it->second;
    const bool hit = p && p->error_class == cls && p->token_index == g->token_index &&
                     (!correction || (p->replacement && *p->replacement == g->original));
    if (!hit) ++fn;
  }
  return Metrics::from_counts(tp, fp, fn);
}

std::vector<Prediction> parse_predictions(std::string_view jsonl) {
  std::vector<Prediction> out;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      const json& d = j.at("detection");
      if (d.is_null()) continue;
      Prediction p;
      p.sentence_id = j.at("sentence_id").get<std::size_t>();
      p.token_index = d.at("token_index").get<std::size_t>();
      p.error_class = parse_error_class(d.at("error_class").get<std::string>());
      if (j.contains("corrections") && j["corrections"].is_array() && !j["corrections"].empty())
        p.replacement = j["corrections"][0].at("suggested").get<std::string>();
      out.push_back(std::move(p));
    } catch (const json::exception& e) {
      throw InputError("prediction line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<GoldRecord> parse_gold(std::string_view jsonl) {
  std::vector<GoldRecord> out;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(GoldRecord::from_json(line));
    } catch (const InputError& e) {
      throw InputError("gold line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace spellkit
