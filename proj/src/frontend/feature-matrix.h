// frontend/feature-matrix.h

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

#ifndef WAVECLASS_FRONTEND_FEATURE_MATRIX_H_
#define WAVECLASS_FRONTEND_FEATURE_MATRIX_H_

#include <span>
#include <string>
#include <vector>

namespace waveclass {

enum class FeatureBasis { kWaveDct, kMfcc, kMfccDeltas, kExternal };

std::string BasisName(FeatureBasis basis);
FeatureBasis BasisFromName(const std::string &name);

// True for bases that are an orthogonal transform of the waveform, where
// additive noise stays additive and model-side adaptation is exact.
bool IsLinearBasis(FeatureBasis basis);

struct FeatureMatrix {
  FeatureBasis basis = FeatureBasis::kExternal;
  int num_frames = 0;
  int dim = 0;
  double hop_seconds = 0.0;
  double width_seconds = 0.0;
  double rate = 16000.0;
  std::vector<double> data;  // num_frames x dim, row-major

  std::span<const double> Frame(int i) const {
    return {data.data() + static_cast<size_t>(i) * dim, static_cast<size_t>(dim)};
  }
  std::span<double> MutableFrame(int i) {
    return {data.data() + static_cast<size_t>(i) * dim, static_cast<size_t>(dim)};
  }
  double FrameCenterSample(int i) const {
    return (i * hop_seconds + 0.5 * width_seconds) * rate;
  }
};

// Frame i covers samples [i*hop, i*hop + width); frames start while i*hop is
// inside the signal and missing samples are zero-padded.
std::vector<std::vector<double>> FrameSignal(std::span<const double> x,
                                             int width, int hop);

}  // namespace waveclass

#endif  // WAVECLASS_FRONTEND_FEATURE_MATRIX_H_
