// frontend/feature-matrix.cc

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

#include "frontend/feature-matrix.h"

#include "base/error.h"

namespace waveclass {

std::string BasisName(FeatureBasis basis) {
  switch (basis) {
    case FeatureBasis::kWaveDct: return "WAVE_DCT";
    case FeatureBasis::kMfcc: return "MFCC";
    case FeatureBasis::kMfccDeltas: return "MFCC_DELTAS";
    case FeatureBasis::kExternal: return "EXTERNAL";
  }
  throw ValidationError("unreachable basis");
}

FeatureBasis BasisFromName(const std::string &name) {
  if (name == "WAVE_DCT") return FeatureBasis::kWaveDct;
  if (name == "MFCC") return FeatureBasis::kMfcc;
  if (name == "MFCC_DELTAS") return FeatureBasis::kMfccDeltas;
  if (name == "EXTERNAL") return FeatureBasis::kExternal;
  throw ValidationError("unknown basis name: " + name);
}

bool IsLinearBasis(FeatureBasis basis) {
  return basis == FeatureBasis::kWaveDct;
}

std::vector<std::vector<double>> FrameSignal(std::span<const double> x,
                                             int width, int hop) {
  if (width <= 0 || hop <= 0)
    throw ValidationError("FrameSignal: width and hop must be positive");
  std::vector<std::vector<double>> frames;
  int64_t len = static_cast<int64_t>(x.size());
  for (int64_t start = 0; start < len; start += hop) {
    std::vector<double> frame(width, 0.0);
    int64_t copy = std::min<int64_t>(width, len - start);
    for (int64_t j = 0; j < copy; ++j) frame[j] = x[start + j];
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace waveclass
