// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/perto.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spellkit/errors.hpp"
#include "spellkit/utf8.hpp"

namespace spellkit {

using nlohmann::json;

const PertoTable& PertoTable::standard() {
  static const PertoTable table = from_groups({
      {U'0', U"اآ"},  // alef, alef madda
      {U'1', U"بپتثف"},  // be pe te se fe
      {U'2', U"جچحخ"},  // jim che he khe
      {U'3', U"دذ"},  // dal zal
      {U'4', U"رزژ"},  // re ze zhe
      {U'5', U"سشصض"},  // sin shin sad zad
      {U'6', U"طظ"},  // ta za
      {U'7', U"عغ"},  // ein ghein
      {U'8', U"قنل"},  // qaf nun lam
      {U'9', U"کگ"},  // kaf gaf
      {U'A', U"م"},  // mim
      {U'B', U"و"},  // vav
      {U'C', U"ه"},  // he
      {U'D', U"ی"},  // ye
  });
  return table;
}

PertoTable PertoTable::from_groups(std::vector<Group> groups) {
  PertoTable table;
  std::set<char32_t> codes;
  for (const auto& g : groups) {
    if (!codes.insert(g.code).second)
      throw ConfigError("PERTO code '" + utf8::encode(std::u32string(1, g.code)) + "' used twice");
    if (g.characters.empty()) throw ConfigError("PERTO group without characters");
    for (char32_t c : g.characters) {
      if (!table.codes_.emplace(c, g.code).second)
        throw ConfigError("character '" + utf8::encode(std::u32string(1, c)) +
                          "' appears in more than one PERTO group");
    }
  }
  table.groups_ = std::move(groups);
  return table;
}

PertoTable PertoTable::from_json(std::string_view json_text) {
  try {
    const auto doc = json::parse(json_text);
    std::vector<Group> groups;
    for (const auto& g : doc.at("groups")) {
      const auto code = utf8::decode(g.at("code").get<std::string>());
      if (code.size() != 1) throw ConfigError("PERTO code must be a single character");
      groups.push_back({code.front(), utf8::decode(g.at("characters").get<std::string>())});
    }
    return from_groups(std::move(groups));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("PERTO table: ") + e.what());
  } catch (const DecodeError& e) {
    throw ConfigError(std::string("PERTO table: ") + e.what());
  }
}

PertoTable PertoTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open PERTO table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string PertoTable::to_json() const {
  json groups = json::array();
  for (const auto& g : groups_) {
    groups.push_back({{"code", utf8::encode(std::u32string(1, g.code))},
                      {"characters", utf8::encode(g.characters)}});
  }
  return json{{"groups", groups}}.dump(2);
}

char32_t PertoTable::code_of(char32_t c) const noexcept {
  const auto it = codes_.find(c);
  return it == codes_.end() ? c : it->second;
}

std::u32string PertoTable::alphabet() const {
  std::u32string out;
  for (const auto& g : groups_) out += g.characters;
  return out;
}

std::u32string perto_code(std::u32string_view word, const PertoTable& table) {
  std::u32string code;
  code.reserve(word.size());
  for (char32_t c : word) code.push_back(table.code_of(c));
  return code;
}

std::string perto_code(std::string_view word, const PertoTable& table) {
  return utf8::encode(perto_code(utf8::decode(word), table));
}

bool perto_match(std::u32string_view a, std::u32string_view b, const PertoTable& table) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (table.code_of(a[i]) != table.code_of(b[i])) return false;
  return true;
}

bool perto_match(std::string_view a, std::string_view b, const PertoTable& table) {
  return perto_match(utf8::decode(a), utf8::decode(b), table);
}

}  // namespace spellkit
