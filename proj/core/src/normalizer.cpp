// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/normalizer.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spellkit/errors.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {

using nlohmann::json;

namespace chars {

bool is_word_letter(char32_t c) noexcept {
  return (c >= 0x0620 && c <= 0x065F) || c == 0x0670 || (c >= 0x0671 && c <= 0x06D3) ||
         c == 0x06D5 || (c >= 0x06E5 && c <= 0x06E6) || (c >= 0x06EE && c <= 0x06EF) ||
         (c >= 0x06FA && c <= 0x06FC) || c == 0x06FF || c == 0x200C || c == 0x200D ||
         (c >= 0xFB50 && c <= 0xFDFF) || (c >= 0xFE70 && c <= 0xFEFC);
}

bool is_digit(char32_t c) noexcept {
  return (c >= U'0' && c <= U'9') || (c >= 0x0660 && c <= 0x0669) || (c >= 0x06F0 && c <= 0x06F9);
}

bool is_horizontal_space(char32_t c) noexcept {
  return c == U' ' || c == U'\t' || c == 0x00A0 || c == 0x202F || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x3000;
}

bool is_whitespace(char32_t c) noexcept {
  return is_horizontal_space(c) || c == U'\n' || c == U'\r' || c == U'\v' || c == U'\f' ||
         c == 0x2028 || c == 0x2029;
}

bool is_punctuation(char32_t c) noexcept {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
           (c >= 0x7B && c <= 0x7E);
  }
  return c == 0x00AB || c == 0x00BB || c == 0x00B7 || c == 0x00BF || c == 0x00A1 ||
         (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) || c == 0x060C ||
         c == 0x060D || c == 0x061B || c == 0x061E || c == 0x061F || (c >= 0x066A && c <= 0x066D) ||
         c == 0x06D4 || c == 0xFD3E || c == 0xFD3F;
}

bool is_sentence_delimiter(char32_t c) noexcept {
  return c == U'.' || c == U'!' || c == U'?' || c == 0x061F || c == 0x06D4;
}

}  // namespace chars

namespace {

constexpr std::string_view kRuleCharacterMap = "character_map";
constexpr std::string_view kRuleDiacritics = "diacritics";
constexpr std::string_view kRuleKashida = "kashida";
constexpr std::string_view kRulePseudoSpace = "pseudo_space";

// Decimal separators kept inside a token when flanked by digits.
bool is_numeric_separator(char32_t c) noexcept {
  return c == U'.' || c == U',' || c == U'/' || c == 0x066B || c == 0x066C;
}

char32_t parse_codepoint(const json& value) {
  if (!value.is_string()) throw ConfigError("codepoint entries must be strings");
  const auto s = value.get<std::string>();
  if (s.size() > 2 && (s[0] == 'U' || s[0] == 'u') && s[1] == '+') {
    try {
      std::size_t used = 0;
      const unsigned long cp = std::stoul(s.substr(2), &used, 16);
      if (used != s.size() - 2 || cp > 0x10FFFF) throw ConfigError("bad codepoint '" + s + "'");
      return static_cast<char32_t>(cp);
    } catch (const std::logic_error&) {
      throw ConfigError("bad codepoint '" + s + "'");
    }
  }
  const auto decoded = utf8::decode(s);
  if (decoded.size() != 1) throw ConfigError("expected a single character, got '" + s + "'");
  return decoded.front();
}

std::string format_codepoint(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(c));
  return buf;
}

std::vector<std::u32string> parse_affixes(const json& list) {
  std::vector<std::u32string> out;
  for (const auto& item : list) {
    if (!item.is_string()) throw ConfigError("affix entries must be strings");
    out.push_back(utf8::decode(item.get<std::string>()));
  }
  return out;
}

bool ends_with_word(std::u32string_view chunk, std::u32string_view affix) {
  if (chunk.size() < affix.size() || chunk.substr(chunk.size() - affix.size()) != affix) return false;
  return chunk.size() == affix.size() || !chars::is_word_letter(chunk[chunk.size() - affix.size() - 1]);
}

bool starts_with_word(std::u32string_view chunk, std::u32string_view affix) {
  if (chunk.size() < affix.size() || chunk.substr(0, affix.size()) != affix) return false;
  return chunk.size() == affix.size() || !chars::is_word_letter(chunk[affix.size()]);
}

// Joins "PREFIX word" and "word SUFFIX" across runs of horizontal space.
bool repair_pseudo_spaces(std::u32string& text, const NormalizationConfig& config) {
  struct Run {
    std::size_t begin, end;
    bool space;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < text.size();) {
    const bool space = chars::is_whitespace(text[i]);
    std::size_t j = i;
    while (j < text.size() && chars::is_whitespace(text[j]) == space) ++j;
    runs.push_back({i, j, space});
    i = j;
  }

  std::u32string out;
  out.reserve(text.size());
  bool changed = false;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Run& run = runs[r];
    const std::u32string_view piece(text.data() + run.begin, run.end - run.begin);
    if (run.space && r > 0 && r + 1 < runs.size()) {
      const bool horizontal = std::all_of(piece.begin(), piece.end(), chars::is_horizontal_space);
      const std::u32string_view left(text.data() + runs[r - 1].begin, runs[r - 1].end - runs[r - 1].begin);
      const std::u32string_view right(text.data() + runs[r + 1].begin, runs[r + 1].end - runs[r + 1].begin);
      bool join = false;
      if (horizontal) {
        if (chars::is_word_letter(right.front())) {
          for (const auto& prefix : config.joining_prefixes)
            if (ends_with_word(left, prefix)) join = true;
        }
        if (!join && chars::is_word_letter(left.back())) {
          for (const auto& suffix : config.joining_suffixes)
            if (starts_with_word(right, suffix)) join = true;
        }
      }
      if (join) {
        out.push_back(kZwnj);
        changed = true;
        continue;
      }
    }
    out.append(piece);
  }
  if (changed) text = std::move(out);
  return changed;
}

}  // namespace

NormalizationConfig NormalizationConfig::defaults() {
  NormalizationConfig cfg;
  cfg.character_map = {
      {U'\u064A', U'\u06CC'},  // ARABIC YEH -> FARSI YEH
      {U'\u0649', U'\u06CC'},  // ALEF MAKSURA -> FARSI YEH
      {U'\u0643', U'\u06A9'},  // ARABIC KAF -> KEHEH
      {U'\u0629', U'\u0647'},  // TEH MARBUTA -> HEH
      {U'\u06C0', U'\u0647'},  // HEH WITH YEH ABOVE -> HEH
      {U'\u06C1', U'\u0647'},  // HEH GOAL -> HEH
      {U'\u06BE', U'\u0647'},  // HEH DOACHASHMEE -> HEH
      {U'\u06D5', U'\u0647'},  // AE -> HEH
  };
  // FATHATAN .. HAMZA BELOW, SUPERSCRIPT ALEF
  for (char32_t c = 0x064B; c <= 0x0655; ++c) cfg.diacritics.insert(c);
  cfg.diacritics.insert(U'\u0670');
  cfg.kashida = {U'\u0640'};
  cfg.joining_prefixes = {U"\u0645\u06CC", U"\u0646\u0645\u06CC"};  // mi, nemi
  cfg.joining_suffixes = {U"\u0647\u0627", U"\u0647\u0627\u06CC",
                          U"\u0647\u0627\u06CC\u06CC"};  // ha, haye, hayi
  return cfg;
}

NormalizationConfig NormalizationConfig::from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("normalizer config: ") + e.what());
  }
  NormalizationConfig c;
  try {
    const auto map = doc.value("character_map", json::object());
    for (const auto& [from, to] : map.items()) c.character_map[parse_codepoint(json(from))] = parse_codepoint(to);
    const auto diacritics = doc.value("diacritics", json::array());
    for (const auto& cp : diacritics) c.diacritics.insert(parse_codepoint(cp));
    const auto kashida = doc.value("kashida", json::array());
    for (const auto& cp : kashida) c.kashida.insert(parse_codepoint(cp));
    const auto pseudo = doc.value("pseudo_space", json::object());
    c.joining_prefixes = parse_affixes(pseudo.value("prefixes", json::array()));
    c.joining_suffixes = parse_affixes(pseudo.value("suffixes", json::array()));
    const auto enabled = doc.value("enabled", json::object());
    c.map_characters = enabled.value("character_map", true);
    c.remove_diacritics = enabled.value("diacritics", true);
    c.remove_kashida = enabled.value("kashida", true);
    c.repair_pseudo_space = enabled.value("pseudo_space", true);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("normalizer config: ") + e.what());
  } catch (const DecodeError& e) {
    throw ConfigError(std::string("normalizer config: ") + e.what());
  }
  c.validate();
  return c;
}

NormalizationConfig NormalizationConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open normalizer config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string NormalizationConfig::to_json() const {
  json doc;
  json map = json::object();
  for (const auto& [from, to] : character_map) map[format_codepoint(from)] = format_codepoint(to);
  doc["character_map"] = map;
  doc["diacritics"] = json::array();
  for (char32_t c : diacritics) doc["diacritics"].push_back(format_codepoint(c));
  doc["kashida"] = json::array();
  for (char32_t c : kashida) doc["kashida"].push_back(format_codepoint(c));
  json prefixes = json::array(), suffixes = json::array();
  for (const auto& p : joining_prefixes) prefixes.push_back(utf8::encode(p));
  for (const auto& s : joining_suffixes) suffixes.push_back(utf8::encode(s));
  doc["pseudo_space"] = {{"prefixes", prefixes}, {"suffixes", suffixes}};
  doc["enabled"] = {{"character_map", map_characters},
                    {"diacritics", remove_diacritics},
                    {"kashida", remove_kashida},
                    {"pseudo_space", repair_pseudo_space}};
  return doc.dump(2);
}

void NormalizationConfig::validate() const {
  const auto removed = [&](char32_t c) { return diacritics.contains(c) || kashida.contains(c); };
  for (const auto& [from, to] : character_map) {
    if (character_map.contains(to))
      throw ConfigError("character_map target " + format_codepoint(to) + " is itself mapped");
    if (removed(to)) throw ConfigError("character_map target " + format_codepoint(to) + " is removed");
    if (removed(from))
      throw ConfigError(format_codepoint(from) + " is both mapped and removed");
  }
  const auto check_affix = [&](const std::u32string& affix) {
    if (affix.empty()) throw ConfigError("empty pseudo-space affix");
    for (char32_t c : affix) {
      if (!chars::is_word_letter(c) || c == kZwnj || removed(c) || character_map.contains(c))
        throw ConfigError("pseudo-space affix '" + utf8::encode(affix) +
                          "' must consist of canonical letters");
    }
  };
  for (const auto& p : joining_prefixes) check_affix(p);
  for (const auto& s : joining_suffixes) check_affix(s);
}

NormalizedText normalize(std::string_view raw, const NormalizationConfig& config) {
  std::u32string text = utf8::decode(raw);
  NormalizedText result;

  if (config.map_characters) {
    bool changed = false;
    for (char32_t& c : text) {
      if (const auto it = config.character_map.find(c); it != config.character_map.end()) {
        c = it->second;
        changed = true;
      }
    }
    if (changed) result.applied_rules.emplace_back(kRuleCharacterMap);
  }

  const auto strip = [&](const std::set<char32_t>& set, std::string_view rule) {
    const auto before = text.size();
    std::erase_if(text, [&](char32_t c) { return set.contains(c); });
    if (text.size() != before) result.applied_rules.emplace_back(rule);
  };
  if (config.remove_diacritics) strip(config.diacritics, kRuleDiacritics);
  if (config.remove_kashida) strip(config.kashida, kRuleKashida);

  if (config.repair_pseudo_space && repair_pseudo_spaces(text, config))
    result.applied_rules.emplace_back(kRulePseudoSpace);

  result.content = utf8::encode(text);
  return result;
}

std::vector<Token> tokenize(std::string_view sentence_text, std::size_t base_offset) {
  struct Unit {
    char32_t cp;
    std::size_t begin, end;
  };
  std::vector<Unit> units;
  for (std::size_t pos = 0; pos < sentence_text.size();) {
    const std::size_t begin = pos;
    const char32_t cp = utf8::next(sentence_text, pos);
    units.push_back({cp, begin, pos});
  }

  std::vector<Token> tokens;
  std::size_t start = std::string_view::npos;
  const auto flush = [&](std::size_t end_unit) {
    if (start == std::string_view::npos) return;
    Token t;
    const std::size_t b = units[start].begin;
    const std::size_t e = units[end_unit - 1].end;
    t.surface = std::string(sentence_text.substr(b, e - b));
    t.index = tokens.size();
    t.span = {base_offset + b, base_offset + e};
    bool word = true, has_letter = false;
    for (std::size_t i = start; i < end_unit; ++i) {
      const char32_t c = units[i].cp;
      if (!chars::is_word_letter(c)) word = false;
      if (c != kZwnj && c != 0x200D) has_letter = true;
    }
    t.kind = word && has_letter ? TokenKind::Word : TokenKind::PassThrough;
    tokens.push_back(std::move(t));
    start = std::string_view::npos;
  };

  for (std::size_t i = 0; i < units.size(); ++i) {
    const char32_t c = units[i].cp;
    bool boundary = chars::is_whitespace(c);
    if (!boundary && chars::is_punctuation(c)) {
      const bool numeric = is_numeric_separator(c) && i > 0 && i + 1 < units.size() &&
                           chars::is_digit(units[i - 1].cp) && chars::is_digit(units[i + 1].cp) &&
                           start != std::string_view::npos;
      boundary = !numeric;
    }
    if (boundary) {
      flush(i);
    } else if (start == std::string_view::npos) {
      start = i;
    }
  }
  flush(units.size());
  return tokens;
}

Sentence make_sentence(std::string_view text, std::size_t base_offset) {
  Sentence s;
  s.text = std::string(text);
  s.span = {base_offset, base_offset + text.size()};
  s.tokens = tokenize(text, base_offset);
  return s;
}

std::vector<Sentence> segment_sentences(std::string_view text) {
  std::vector<Sentence> sentences;
  const auto emit = [&](std::size_t b, std::size_t e) {
    // Trim surrounding whitespace so spans cover exactly the sentence body.
    std::size_t pos = b;
    std::size_t first = e, last = b;
    while (pos < e) {
      const std::size_t at = pos;
      const char32_t c = utf8::next(text, pos);
      if (!chars::is_whitespace(c)) {
        if (first == e) first = at;
        last = pos;
      }
    }
    if (first == e) return;
    Sentence s = make_sentence(text.substr(first, last - first), first);
    if (!s.tokens.empty()) sentences.push_back(std::move(s));
  };

  std::size_t segment_begin = 0;
  char32_t previous = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t at = pos;
    const char32_t c = utf8::next(text, pos);
    if (chars::is_sentence_delimiter(c)) {
      bool decimal = false;
      if (c == U'.' && chars::is_digit(previous) && pos < text.size()) {
        std::size_t peek = pos;
        decimal = chars::is_digit(utf8::next(text, peek));
      }
      if (!decimal) {
        emit(segment_begin, at);
        segment_begin = pos;
      }
    }
    previous = c;
  }
  emit(segment_begin, text.size());
  return sentences;
}

}  // namespace spellkit
