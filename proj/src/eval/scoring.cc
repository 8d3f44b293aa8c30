// eval/scoring.cc

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

#include "eval/scoring.h"

#include <algorithm>
#include <map>

#include "base/error.h"

namespace waveclass {

int64_t EvaluationReport::TotalCount() const {
  int64_t total = 0;
  for (int64_t v : confusion) total += v;
  return total;
}

std::vector<int64_t> ConfusionMatrix(const std::vector<std::string> &predictions,
                                     const std::vector<std::string> &truths,
                                     const std::vector<std::string> &order) {
  if (predictions.size() != truths.size())
    throw ValidationError("ConfusionMatrix: prediction/truth length mismatch");
  std::map<std::string, int> index;
  for (size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  std::vector<int64_t> counts(order.size() * order.size(), 0);
  for (size_t i = 0; i < truths.size(); ++i) {
    auto t = index.find(truths[i]);
    auto p = index.find(predictions[i]);
    if (t == index.end())
      throw ValidationError("ConfusionMatrix: unknown truth " + truths[i]);
    if (p == index.end())
      throw ValidationError("ConfusionMatrix: unknown prediction " +
                            predictions[i]);
    ++counts[static_cast<size_t>(t->second) * order.size() + p->second];
  }
  return counts;
}

EvaluationReport Score(const std::vector<std::string> &predictions48,
                       const std::vector<std::string> &truths48,
                       const ClassMap &map) {
  if (predictions48.size() != truths48.size())
    throw ValidationError("Score: prediction/truth length mismatch");
  EvaluationReport report;
  report.class_order = map.Groups39();

  std::vector<std::string> pred39(predictions48.size()),
      truth39(truths48.size());
  for (size_t i = 0; i < predictions48.size(); ++i) {
    pred39[i] = map.Fold39(predictions48[i]);
    truth39[i] = map.Fold39(truths48[i]);
  }
  report.confusion = ConfusionMatrix(pred39, truth39, report.class_order);

  const size_t k = report.class_order.size();
  report.truth_counts.assign(k, 0);
  int64_t correct = 0, total = 0;
  for (size_t t = 0; t < k; ++t) {
    for (size_t p = 0; p < k; ++p) {
      int64_t v = report.confusion[t * k + p];
      report.truth_counts[t] += v;
      total += v;
      if (t == p) correct += v;
    }
  }
  report.error_rate =
      total == 0 ? 0.0
                 : 1.0 - static_cast<double>(correct) / static_cast<double>(total);
  return report;
}

}  // namespace waveclass
