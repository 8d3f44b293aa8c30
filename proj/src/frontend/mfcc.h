// frontend/mfcc.h

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

#ifndef WAVECLASS_FRONTEND_MFCC_H_
#define WAVECLASS_FRONTEND_MFCC_H_

#include <span>
#include <vector>

#include "frontend/feature-matrix.h"
#include "frontend/wave-io.h"

namespace waveclass {

struct MfccOptions {
  int frame_width = 400;  // 25 ms at 16 kHz
  int frame_hop = 160;    // 10 ms
  int num_filters = 26;
  int num_ceps = 13;
  double log_floor = 1e-10;
  double low_freq_hz = 0.0;
  double high_freq_hz = 8000.0;
};

// Hamming window -> magnitude spectrum -> triangular mel filterbank -> floored
// log -> orthonormal DCT, keeping c0..c(num_ceps-1).
std::vector<double> ComputeMfcc(std::span<const double> frame, double rate,
                                const MfccOptions &options = {});

// Overlapping 25ms/10ms framing of the whole sentence.
FeatureMatrix MfccFeatures(const SentenceWaveform &sentence,
                           const MfccOptions &options = {});

}  // namespace waveclass

#endif  // WAVECLASS_FRONTEND_MFCC_H_
