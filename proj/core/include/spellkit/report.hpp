// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spellkit/evalharness.hpp"

namespace spellkit {

struct ReportRow {
  std::string configuration;
  Metrics metrics;
  /// Name of the row this one is compared against (delta F1 column).
  std::optional<std::string> baseline;
};

struct ReportTable {
  std::string title;
  EvalTask task = EvalTask::NonWordCorrection;
  std::vector<ReportRow> rows;
};

struct Report {
  std::vector<ReportTable> tables;

  /// Percentages with one decimal, one block per table.
  std::string to_text() const;
  std::string to_json() const;
  /// task,configuration,precision,recall,f1,delta_f1
  std::string to_csv() const;
};

/// Percentage of a ratio rounded to one decimal, as printed in every format.
double percent_1dp(double ratio) noexcept;

}  // namespace spellkit
