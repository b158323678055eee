// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "spellkit/engine.hpp"
#include "spellkit/fourgram.hpp"
#include "stubs.hpp"

namespace spellkit::testing {

/// Repository data/ directory.
std::filesystem::path data_dir();
/// tests/golden directory.
std::filesystem::path golden_dir();

/// Intraductal-mass report sentence with the real-word slip.
std::string intraductal_sentence();
std::string intraductal_correct_word();  // normalized
std::string intraductal_wrong_word();    // normalized
Lexicon intraductal_lexicon();
/// Stub scorer: 0.630 for the intended word, 0.034 for the typed one, equal
/// weight for everything else.
std::shared_ptr<FixedScorer> intraductal_scorer();
Engine intraductal_engine(DetectorConfig config = {});

/// Four-gram model trained on the bundled demo corpus.
FourGramModel demo_model();
/// Engine from data/demo/engine.json (the pinned golden configuration).
Engine demo_engine();

}  // namespace spellkit::testing

namespace spellkit::testing {

/// One request/response pair under tests/golden, listed in cases.json.
struct GoldenCase {
  std::string name;
  std::string method;
  std::string path;
  int status = 200;
};

std::vector<GoldenCase> golden_cases();
std::string read_text(const std::filesystem::path& path);
/// Body of `<name>.request.json`, or empty for GET cases.
std::string golden_request(const GoldenCase& c);
std::filesystem::path golden_response_path(const GoldenCase& c);

}  // namespace spellkit::testing
