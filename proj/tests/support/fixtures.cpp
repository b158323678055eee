// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace spellkit::testing {

std::filesystem::path data_dir() { return SPELLKIT_TEST_DATA_DIR; }
std::filesystem::path golden_dir() { return SPELLKIT_TEST_GOLDEN_DIR; }

std::string intraductal_sentence() { return "در سمت چپ توده اينتراركتال ديده شد."; }

std::string intraductal_correct_word() {
  return normalize("اينتراداكتال", NormalizationConfig::defaults()).content;
}

std::string intraductal_wrong_word() { return normalize("اينتراركتال", NormalizationConfig::defaults()).content; }

Lexicon intraductal_lexicon() {
  Lexicon lex;
  for (const char* w : {"در", "سمت", "چپ", "توده", "دیده", "شد"}) lex.insert(w);
  lex.insert(intraductal_correct_word());
  lex.insert(intraductal_wrong_word());
  return lex;
}

std::shared_ptr<FixedScorer> intraductal_scorer() {
  return std::make_shared<FixedScorer>(
      std::map<std::string, double, std::less<>>{{intraductal_correct_word(), 0.630}, {intraductal_wrong_word(), 0.034}}, 0.05);
}

Engine intraductal_engine(DetectorConfig config) {
  return Engine(NormalizationConfig::defaults(), intraductal_lexicon(), PertoTable::standard(), intraductal_scorer(), config);
}

FourGramModel demo_model() {
  std::ifstream in(data_dir() / "demo" / "radiology_corpus.txt", std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto text = normalize(buf.str(), NormalizationConfig::defaults());
  std::vector<std::vector<std::string>> sentences;
  for (const auto& s : segment_sentences(text)) sentences.push_back(token_surfaces(s));
  return FourGramModel::train(sentences);
}

Engine demo_engine() { return Engine::from_config(EngineConfig::load(data_dir() / "demo" / "engine.json")); }

}  // namespace spellkit::testing

namespace spellkit::testing {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<GoldenCase> golden_cases() {
  const auto doc = nlohmann::json::parse(read_text(golden_dir() / "cases.json"));
  std::vector<GoldenCase> out;
  for (const auto& c : doc.at("cases")) {
    out.push_back({c.at("name").get<std::string>(), c.at("method").get<std::string>(),
                   c.at("path").get<std::string>(), c.at("status").get<int>()});
  }
  return out;
}

std::string golden_request(const GoldenCase& c) {
  if (c.method == "GET") return {};
  return read_text(golden_dir() / (c.name + ".request.json"));
}

std::filesystem::path golden_response_path(const GoldenCase& c) {
  return golden_dir() / (c.name + ".response.json");
}

}  // namespace spellkit::testing
