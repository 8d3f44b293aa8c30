// classifier/score-dump.h

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

#ifndef WAVECLASS_CLASSIFIER_SCORE_DUMP_H_
#define WAVECLASS_CLASSIFIER_SCORE_DUMP_H_

#include <cstdint>
#include <string>
#include <vector>

namespace waveclass {

// Per-instance decision values in a declared class order, for offline
// combination experiments: one line per instance.
struct ScoreDump {
  std::string condition;
  std::string rule;
  std::string basis;
  std::vector<std::string> classes;
  std::vector<std::string> instance_ids;
  std::vector<std::string> truths;  // 48-level groups
  std::vector<std::vector<double>> scores;
  std::string config_hash;
  uint64_t seed = 0;
};

void SaveScoreDump(const ScoreDump &dump, const std::string &path);
ScoreDump LoadScoreDump(const std::string &path);

}  // namespace waveclass

#endif  // WAVECLASS_CLASSIFIER_SCORE_DUMP_H_
