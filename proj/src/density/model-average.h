// density/model-average.h

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

#ifndef WAVECLASS_DENSITY_MODEL_AVERAGE_H_
#define WAVECLASS_DENSITY_MODEL_AVERAGE_H_

#include <span>
#include <vector>

#include "density/diag-gmm.h"
#include "density/em.h"

namespace waveclass {

// M = log sum_c u_c exp(L_c) over models with differing component counts,
// computed with a shared offset.  Weights must be positive and sum to 1.
double CombineModelLogLiks(std::span<const double> logliks,
                           std::span<const double> weights);

double ModelAverageLogLik(std::span<const DiagGmm *const> models,
                          std::span<const double> weights,
                          std::span<const double> x);

// Posterior model weights on a development set:
//   u_c = sum_x exp(L_c(x)) / sum_c' sum_x exp(L_c'(x)),
// evaluated with a shared log offset.
std::vector<double> PosteriorWeights(std::span<const DiagGmm *const> models,
                                     const DataView &dev);

}  // namespace waveclass

#endif  // WAVECLASS_DENSITY_MODEL_AVERAGE_H_
