// eval/report.h

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

#ifndef WAVECLASS_EVAL_REPORT_H_
#define WAVECLASS_EVAL_REPORT_H_

#include <string>
#include <vector>

#include "eval/scoring.h"

namespace waveclass {

// Writes "<stem>.report" (line-oriented table) and "<stem>.report.json"
// (machine-readable mirror of every field).
void WriteReportFiles(const EvaluationReport &report, const std::string &stem);

EvaluationReport LoadReportJson(const std::string &path);

struct SummaryRow {
  std::string method;     // e.g. "WAVE_DCT/adapt/T"
  std::string condition;
  double error_rate = 0.0;
};

// Error vs condition per method, as text and JSON next to the reports.
void WriteSummary(const std::vector<SummaryRow> &rows, const std::string &stem,
                  const std::string &config_hash, uint64_t seed);

}  // namespace waveclass

#endif  // WAVECLASS_EVAL_REPORT_H_
