// density/model-average.cc

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

#include "density/model-average.h"

#include <cmath>
#include <limits>

#include "base/error.h"
#include "base/math-util.h"

namespace waveclass {

double CombineModelLogLiks(std::span<const double> logliks,
                           std::span<const double> weights) {
  if (logliks.empty())
    throw ConfigError("model average over an empty component set");
  if (logliks.size() != weights.size())
    throw ShapeError("model average: weight/model count mismatch");
  double wsum = 0.0;
  std::vector<double> terms(logliks.size());
  for (size_t i = 0; i < logliks.size(); ++i) {
    // Posterior weights may underflow to exact zero; the term then simply
    // drops out of the sum.
    if (weights[i] < 0.0)
      throw ValidationError("model average: negative weight");
    wsum += weights[i];
    terms[i] = weights[i] > 0.0
                   ? std::log(weights[i]) + logliks[i]
                   : -std::numeric_limits<double>::infinity();
  }
  if (std::abs(wsum - 1.0) > 1e-6)
    throw ValidationError("model average: weights must sum to 1");
  double out = LogSumExp(terms);
  if (!std::isfinite(out))
    throw NumericError("model average: all weights vanished");
  return out;
}

double ModelAverageLogLik(std::span<const DiagGmm *const> models,
                          std::span<const double> weights,
                          std::span<const double> x) {
  std::vector<double> logliks(models.size());
  for (size_t i = 0; i < models.size(); ++i)
    logliks[i] = models[i]->LogLikelihood(x);
  return CombineModelLogLiks(logliks, weights);
}

std::vector<double> PosteriorWeights(std::span<const DiagGmm *const> models,
                                     const DataView &dev) {
  if (models.empty())
    throw ConfigError("posterior weights over an empty component set");
  if (dev.n <= 0)
    throw ValidationError("posterior weights need a nonempty development set");
  // B_c = log sum_x exp(L_c(x)); u_c = exp(B_c - logsumexp_c B_c).
  std::vector<double> b(models.size());
  std::vector<double> logliks(dev.n);
  for (size_t c = 0; c < models.size(); ++c) {
    for (int64_t i = 0; i < dev.n; ++i)
      logliks[i] = models[c]->LogLikelihood(dev.Row(i));
    b[c] = LogSumExp(logliks);
    if (!std::isfinite(b[c]))
      throw NumericError("posterior weights: development likelihood underflow");
  }
  double norm = LogSumExp(b);
  std::vector<double> u(models.size());
  for (size_t c = 0; c < models.size(); ++c) u[c] = std::exp(b[c] - norm);
  return u;
}

}  // namespace waveclass
