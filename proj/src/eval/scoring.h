// eval/scoring.h

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

#ifndef WAVECLASS_EVAL_SCORING_H_
#define WAVECLASS_EVAL_SCORING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "corpus/class-map.h"

namespace waveclass {

struct EvaluationReport {
  std::string condition;
  std::string rule;
  double error_rate = 0.0;
  double runtime_seconds = 0.0;
  std::vector<std::string> class_order;  // scoring groups, sorted
  std::vector<int64_t> truth_counts;     // per scoring group
  std::vector<int64_t> confusion;        // row = truth, column = prediction
  int floored_dims = 0;
  std::string config_hash;
  uint64_t seed = 0;
  std::string notes;

  int64_t TotalCount() const;
  int64_t ConfusionAt(int truth, int pred) const {
    return confusion[static_cast<size_t>(truth) * class_order.size() + pred];
  }
};

// Counts over folded labels; `order` declares the class indexing.
std::vector<int64_t> ConfusionMatrix(const std::vector<std::string> &predictions,
                                     const std::vector<std::string> &truths,
                                     const std::vector<std::string> &order);

// Folds 48-level predictions and truths to the scoring groups, then counts.
EvaluationReport Score(const std::vector<std::string> &predictions48,
                       const std::vector<std::string> &truths48,
                       const ClassMap &map);

}  // namespace waveclass

#endif  // WAVECLASS_EVAL_SCORING_H_
