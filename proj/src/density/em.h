// density/em.h

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

#ifndef WAVECLASS_DENSITY_EM_H_
#define WAVECLASS_DENSITY_EM_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "density/diag-gmm.h"

namespace waveclass {

// Row-major view over n points of dimension d.
struct DataView {
  const double *data = nullptr;
  int64_t n = 0;
  int d = 0;

  DataView() = default;
  DataView(const std::vector<double> &flat, int dim)
      : data(flat.data()), n(static_cast<int64_t>(flat.size()) / dim), d(dim) {}

  std::span<const double> Row(int64_t i) const {
    return {data + i * d, static_cast<size_t>(d)};
  }
};

struct EmOptions {
  int max_iterations = 200;
  // Converged when the relative improvement of the average per-sample
  // log-likelihood falls below this.
  double rel_tolerance = 1e-6;
  // Variance floor as a fraction of the global per-coordinate variance.
  double var_floor_fraction = 1e-4;
  int max_reseeds = 20;
};

struct EmLog {
  // Average per-sample log-likelihood at each E-step.
  std::vector<double> avg_loglik;
  // Iterations at which a collapsed component was re-seeded.
  std::vector<int> reseed_iterations;
};

// Maximum-likelihood training.  Free-mean models are seeded k-means++ style
// on a subsample; zero-mean models start from the global variance scaled by
// log-spaced factors.  c == 1 takes the closed form directly.  Deterministic
// given the seed.  Requires n >= 5*c.
DiagGmm EmTrain(const DataView &data, int c, bool zero_mean, uint64_t seed,
                const std::string &basis, const EmOptions &options = {},
                EmLog *log = nullptr);

// Process-wide count of EmTrain entries; sweeps under the ADAPT policy must
// leave it unchanged.
uint64_t EmTrainInvocations();

}  // namespace waveclass

#endif  // WAVECLASS_DENSITY_EM_H_
