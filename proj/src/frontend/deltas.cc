// frontend/deltas.cc

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

#include "frontend/deltas.h"

#include <algorithm>

#include "base/error.h"

namespace waveclass {

namespace {

constexpr int kWindow = 2;
constexpr double kDenominator = 10.0;  // 2 * (1^2 + 2^2)

// in/out: num_frames x dim, row-major.
std::vector<double> Regress(const std::vector<double> &in, int num_frames,
                            int dim) {
  std::vector<double> out(in.size());
  auto frame = [&](int t) {
    t = std::clamp(t, 0, num_frames - 1);
    return in.data() + static_cast<size_t>(t) * dim;
  };
  for (int t = 0; t < num_frames; ++t) {
    double *o = out.data() + static_cast<size_t>(t) * dim;
    for (int j = 0; j < dim; ++j) {
      double acc = 0.0;
      for (int k = 1; k <= kWindow; ++k)
        acc += k * (frame(t + k)[j] - frame(t - k)[j]);
      o[j] = acc / kDenominator;
    }
  }
  return out;
}

}  // namespace

FeatureMatrix AppendDeltas(const FeatureMatrix &features) {
  if (features.num_frames == 0)
    throw ValidationError("AppendDeltas: empty feature matrix");
  const int n = features.num_frames, d = features.dim;
  std::vector<double> delta = Regress(features.data, n, d);
  std::vector<double> delta2 = Regress(delta, n, d);

  FeatureMatrix out;
  out.basis = features.basis == FeatureBasis::kMfcc ? FeatureBasis::kMfccDeltas
                                                    : features.basis;
  out.num_frames = n;
  out.dim = 3 * d;
  out.hop_seconds = features.hop_seconds;
  out.width_seconds = features.width_seconds;
  out.rate = features.rate;
  out.data.resize(static_cast<size_t>(n) * out.dim);
  for (int t = 0; t < n; ++t) {
    double *o = out.data.data() + static_cast<size_t>(t) * out.dim;
    const double *s = features.data.data() + static_cast<size_t>(t) * d;
    const double *d1 = delta.data() + static_cast<size_t>(t) * d;
    const double *d2 = delta2.data() + static_cast<size_t>(t) * d;
    std::copy(s, s + d, o);
    std::copy(d1, d1 + d, o + d);
    std::copy(d2, d2 + d, o + 2 * d);
  }
  return out;
}

}  // namespace waveclass
