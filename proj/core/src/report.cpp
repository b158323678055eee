// Copyright 2026 The Spellkit Authors
// Licensed under the Apache License, Version 2.0

#include "spellkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace spellkit {
namespace {

std::string fixed_1dp(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

std::optional<double> delta_f1(const ReportTable& table, const ReportRow& row) {
  if (!row.baseline) return std::nullopt;
  for (const auto& other : table.rows)
    if (other.configuration == *row.baseline)
      return std::round((percent_1dp(row.metrics.f1) - percent_1dp(other.metrics.f1)) * 10.0) / 10.0;
  return std::nullopt;
}

}  // namespace

double percent_1dp(double ratio) noexcept { return std::round(ratio * 1000.0) / 10.0; }

std::string Report::to_text() const {
  std::ostringstream out;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& table = tables[t];
    if (t) out << '\n';
    out << table.title << " [" << to_string(table.task) << "]\n";
    std::size_t width = std::string_view("configuration").size();
    for (const auto& row : table.rows) width = std::max(width, row.configuration.size());
    const auto pad = [](std::string s, std::size_t w) {
      s.resize(std::max(w, s.size()), ' ');
      return s;
    };
    out << pad("configuration", width) << "  " << pad("P", 6) << pad("R", 6) << pad("F1", 6) << "dF1\n";
    for (const auto& row : table.rows) {
      const auto delta = delta_f1(table, row);
      std::string d = delta ? (*delta >= 0 ? "+" : "") + fixed_1dp(*delta) : "";
      std::string line = pad(row.configuration, width) + "  " + pad(fixed_1dp(percent_1dp(row.metrics.precision)), 6) +
                         pad(fixed_1dp(percent_1dp(row.metrics.recall)), 6) +
                         pad(fixed_1dp(percent_1dp(row.metrics.f1)), 6) + d;
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& table : tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json r{{"configuration", row.configuration},
                       {"precision", percent_1dp(row.metrics.precision)},
                       {"recall", percent_1dp(row.metrics.recall)},
                       {"f1", percent_1dp(row.metrics.f1)},
                       {"true_positives", row.metrics.true_positives},
                       {"false_positives", row.metrics.false_positives},
                       {"false_negatives", row.metrics.false_negatives}};
      const auto delta = delta_f1(table, row);
      r["delta_f1"] = delta ? nlohmann::json(*delta) : nlohmann::json(nullptr);
      rows.push_back(std::move(r));
    }
    doc.push_back({{"title", table.title}, {"task", to_string(table.task)}, {"rows", std::move(rows)}});
  }
  return nlohmann::json{{"tables", doc}}.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "task,configuration,precision,recall,f1,delta_f1\n";
  for (const auto& table : tables) {
    for (const auto& row : table.rows) {
      const auto delta = delta_f1(table, row);
      out << to_string(table.task) << ',' << row.configuration << ',' << fixed_1dp(percent_1dp(row.metrics.precision))
          << ',' << fixed_1dp(percent_1dp(row.metrics.recall)) << ',' << fixed_1dp(percent_1dp(row.metrics.f1)) << ','
          << (delta ? fixed_1dp(*delta) : "") << '\n';
    }
  }
  return out.str();
}

}  // namespace spellkit
