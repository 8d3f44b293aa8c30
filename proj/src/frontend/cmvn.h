// frontend/cmvn.h

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

#ifndef WAVECLASS_FRONTEND_CMVN_H_
#define WAVECLASS_FRONTEND_CMVN_H_

#include <vector>

#include "frontend/feature-matrix.h"

namespace waveclass {

enum class StatsSource { kTrainset, kSentence };

// Per-feature mean and variance used for frame-wise standardization.
// Variances never fall below the floor; floored_dims records how many did.
struct StandardizationStats {
  std::vector<double> mean;
  std::vector<double> var;
  StatsSource source = StatsSource::kTrainset;
  int floored_dims = 0;
  double var_floor = 1e-10;
};

StandardizationStats ComputeStats(
    const std::vector<const FeatureMatrix *> &matrices, StatsSource source,
    double var_floor = 1e-10);

StandardizationStats ComputeSentenceStats(const FeatureMatrix &features,
                                          double var_floor = 1e-10);

// (x - mean) / sqrt(var), frame by frame.
FeatureMatrix ApplyCmvn(const FeatureMatrix &features,
                        const StandardizationStats &stats);

}  // namespace waveclass

#endif  // WAVECLASS_FRONTEND_CMVN_H_
