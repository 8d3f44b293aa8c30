// eval/report.cc

// Copyright 2026  Waveclass Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "eval/report.h"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "base/error.h"
#include "base/text-io.h"

namespace waveclass {

using nlohmann::json;

void WriteReportFiles(const EvaluationReport &report, const std::string &stem) {
  const size_t k = report.class_order.size();
  std::ostringstream text;
  text << "condition " << report.condition << "\n";
  text << "rule " << report.rule << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", report.error_rate);
  text << "error_rate " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.3f", report.runtime_seconds);
  text << "runtime_seconds " << buf << "\n";
  text << "instances " << report.TotalCount() << "\n";
  text << "floored_dims " << report.floored_dims << "\n";
  text << "config_hash " << (report.config_hash.empty() ? "-" : report.config_hash)
       << " seed " << report.seed << "\n";
  if (!report.notes.empty()) text << "notes " << report.notes << "\n";
  text << "class truth_count correct\n";
  for (size_t t = 0; t < k; ++t) {
    text << report.class_order[t] << " " << report.truth_counts[t] << " "
         << report.ConfusionAt(static_cast<int>(t), static_cast<int>(t))
         << "\n";
  }
  text << "confusion rows=truth cols=prediction order as above\n";
  for (size_t t = 0; t < k; ++t) {
    for (size_t p = 0; p < k; ++p) {
      if (p) text << " ";
      text << report.confusion[t * k + p];
    }
    text << "\n";
  }
  WriteFile(stem + ".report", text.str());

  json j;
  j["condition"] = report.condition;
  j["rule"] = report.rule;
  j["error_rate"] = report.error_rate;
  j["runtime_seconds"] = report.runtime_seconds;
  j["class_order"] = report.class_order;
  j["truth_counts"] = report.truth_counts;
  j["confusion"] = report.confusion;
  j["floored_dims"] = report.floored_dims;
  j["config_hash"] = report.config_hash;
  j["seed"] = report.seed;
  j["notes"] = report.notes;
  WriteFile(stem + ".report.json", j.dump(2) + "\n");
}

EvaluationReport LoadReportJson(const std::string &path) {
  std::string all;
  for (const auto &line : ReadFileLines(path)) all += line + "\n";
  json j = json::parse(all);
  EvaluationReport report;
  report.condition = j.at("condition").get<std::string>();
  report.rule = j.at("rule").get<std::string>();
  report.error_rate = j.at("error_rate").get<double>();
  report.runtime_seconds = j.at("runtime_seconds").get<double>();
  report.class_order = j.at("class_order").get<std::vector<std::string>>();
  report.truth_counts = j.at("truth_counts").get<std::vector<int64_t>>();
  report.confusion = j.at("confusion").get<std::vector<int64_t>>();
  report.floored_dims = j.at("floored_dims").get<int>();
  report.config_hash = j.at("config_hash").get<std::string>();
  report.seed = j.at("seed").get<uint64_t>();
  report.notes = j.at("notes").get<std::string>();
  return report;
}

void WriteSummary(const std::vector<SummaryRow> &rows, const std::string &stem,
                  const std::string &config_hash, uint64_t seed) {
  std::ostringstream text;
  text << "# error rate vs condition per method\n";
  text << "# config_hash " << (config_hash.empty() ? "-" : config_hash)
       << " seed " << seed << "\n";
  text << "method condition error_rate\n";
  char buf[64];
  for (const auto &row : rows) {
    std::snprintf(buf, sizeof(buf), "%.4f", row.error_rate);
    text << row.method << " " << row.condition << " " << buf << "\n";
  }
  WriteFile(stem + ".txt", text.str());

  json j;
  j["config_hash"] = config_hash;
  j["seed"] = seed;
  j["rows"] = json::array();
  for (const auto &row : rows) {
    j["rows"].push_back({{"method", row.method},
                         {"condition", row.condition},
                         {"error_rate", row.error_rate}});
  }
  WriteFile(stem + ".json", j.dump(2) + "\n");
}

}  // namespace waveclass
