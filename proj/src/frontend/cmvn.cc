// frontend/cmvn.cc

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

#include "frontend/cmvn.h"

#include <cmath>

#include "base/error.h"

namespace waveclass {

StandardizationStats ComputeStats(
    const std::vector<const FeatureMatrix *> &matrices, StatsSource source,
    double var_floor) {
  if (matrices.empty())
    throw ValidationError("ComputeStats: no feature matrices");
  const int dim = matrices[0]->dim;
  StandardizationStats stats;
  stats.source = source;
  stats.var_floor = var_floor;
  stats.mean.assign(dim, 0.0);
  stats.var.assign(dim, 0.0);

  int64_t total = 0;
  for (const FeatureMatrix *m : matrices) {
    if (m->dim != dim) throw ShapeError("ComputeStats: dimension mismatch");
    for (int t = 0; t < m->num_frames; ++t) {
      auto frame = m->Frame(t);
      for (int j = 0; j < dim; ++j) stats.mean[j] += frame[j];
      ++total;
    }
  }
  if (total == 0) throw ValidationError("ComputeStats: no frames");
  for (int j = 0; j < dim; ++j) stats.mean[j] /= static_cast<double>(total);
  for (const FeatureMatrix *m : matrices) {
    for (int t = 0; t < m->num_frames; ++t) {
      auto frame = m->Frame(t);
      for (int j = 0; j < dim; ++j) {
        double d = frame[j] - stats.mean[j];
        stats.var[j] += d * d;
      }
    }
  }
  for (int j = 0; j < dim; ++j) {
    stats.var[j] /= static_cast<double>(total);
    if (stats.var[j] < var_floor) {
      stats.var[j] = var_floor;
      ++stats.floored_dims;
    }
  }
  return stats;
}

StandardizationStats ComputeSentenceStats(const FeatureMatrix &features,
                                          double var_floor) {
  return ComputeStats({&features}, StatsSource::kSentence, var_floor);
}

FeatureMatrix ApplyCmvn(const FeatureMatrix &features,
                        const StandardizationStats &stats) {
  if (static_cast<int>(stats.mean.size()) != features.dim)
    throw ShapeError("ApplyCmvn: stats dimension mismatch");
  FeatureMatrix out = features;
  std::vector<double> inv_std(features.dim);
  for (int j = 0; j < features.dim; ++j)
    inv_std[j] = 1.0 / std::sqrt(stats.var[j]);
  for (int t = 0; t < out.num_frames; ++t) {
    auto frame = out.MutableFrame(t);
    for (int j = 0; j < out.dim; ++j)
      frame[j] = (frame[j] - stats.mean[j]) * inv_std[j];
  }
  return out;
}

}  // namespace waveclass
