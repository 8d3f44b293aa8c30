// classifier/assembly.cc

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

#include "classifier/assembly.h"

#include <algorithm>
#include <cmath>

#include "base/error.h"

namespace waveclass {

int NearestFrameIndex(const FeatureMatrix &features, double anchor_sample) {
  if (features.num_frames <= 0)
    throw ValidationError("NearestFrameIndex: empty feature matrix");
  double hop = features.hop_seconds * features.rate;
  double head = 0.5 * features.width_seconds * features.rate;
  double pos = (anchor_sample - head) / hop;
  int lo = static_cast<int>(std::floor(pos));
  // Centres are equispaced: only lo and lo+1 can be nearest; prefer the
  // earlier one on an exact tie.
  double d_lo = std::abs(anchor_sample - features.FrameCenterSample(lo));
  double d_hi = std::abs(anchor_sample - features.FrameCenterSample(lo + 1));
  return d_hi < d_lo ? lo + 1 : lo;
}

std::vector<double> AssembleFrames(const FeatureMatrix &features,
                                   double anchor_sample, int f) {
  if (f < 1) throw ValidationError("AssembleFrames: need f >= 1");
  const int dim = features.dim;
  const bool zero_pad = IsLinearBasis(features.basis);
  int center = NearestFrameIndex(features, anchor_sample);
  int lo = center - (f - 1) / 2;

  std::vector<double> out(static_cast<size_t>(f) * dim, 0.0);
  for (int k = 0; k < f; ++k) {
    int idx = lo + k;
    if (idx < 0 || idx >= features.num_frames) {
      if (zero_pad) continue;  // slot stays zero
      idx = std::clamp(idx, 0, features.num_frames - 1);
    }
    auto frame = features.Frame(idx);
    std::copy(frame.begin(), frame.end(),
              out.begin() + static_cast<size_t>(k) * dim);
  }
  return out;
}

}  // namespace waveclass
