// tests/oracles.cc

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

#include "oracles.h"

#include <cmath>

#include "base/rng.h"

namespace waveclass {
namespace oracle {

long double DiagGaussianLogDensity(std::span<const double> mean,
                                   std::span<const double> var,
                                   std::span<const double> x) {
  const long double two_pi = 6.283185307179586476925286766559L;
  long double log_norm = 0.0L, quad = 0.0L;
  for (size_t j = 0; j < x.size(); ++j) {
    log_norm += 0.5L * std::log(two_pi * (long double)var[j]);
    long double d = (long double)x[j] - (long double)mean[j];
    quad += d * d / (long double)var[j];
  }
  return -log_norm - 0.5L * quad;
}

long double BruteForceGmmLogDensity(const DiagGmm &model,
                                    std::span<const double> x) {
  long double density = 0.0L;
  for (const auto &comp : model.components()) {
    long double lg = DiagGaussianLogDensity(comp.mean, comp.var, x);
    density += (long double)comp.weight * std::exp(lg);
  }
  return std::log(density);
}

// Values computed independently from the closed-form cosine expressions.
const std::array<std::array<double, 4>, 4> kDct4 = {{
    {0.5, 0.5, 0.5, 0.5},
    {0.65328148243818829, 0.27059805007309856, -0.27059805007309851,
     -0.65328148243818829},
    {0.50000000000000011, -0.5, -0.50000000000000011, 0.49999999999999989},
    {0.27059805007309856, -0.6532814824381884, 0.65328148243818818,
     -0.27059805007309862},
}};

std::vector<double> RandomSpdMatrix(int d, uint64_t seed) {
  Rng rng(seed);
  std::vector<double> a(static_cast<size_t>(d) * d);
  for (double &v : a) v = rng.Gaussian();
  std::vector<double> spd(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int k = 0; k < d; ++k)
        acc += a[static_cast<size_t>(k) * d + i] * a[static_cast<size_t>(k) * d + j];
      spd[static_cast<size_t>(i) * d + j] = acc + (i == j ? 0.1 : 0.0);
    }
  return spd;
}

}  // namespace oracle
}  // namespace waveclass
