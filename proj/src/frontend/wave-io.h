// frontend/wave-io.h

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

#ifndef WAVECLASS_FRONTEND_WAVE_IO_H_
#define WAVECLASS_FRONTEND_WAVE_IO_H_

#include <span>
#include <string>
#include <vector>

namespace waveclass {

struct SentenceWaveform {
  std::string sentence_id;
  std::vector<double> samples;
  double rate = 16000.0;
  bool normalized = false;  // when set, mean squared sample == 1

  int64_t NumSamples() const { return static_cast<int64_t>(samples.size()); }
};

// Rescales so the mean squared sample is exactly 1.  Throws ValidationError
// for empty or all-zero input.
std::vector<double> NormalizeEnergy(std::span<const double> x);

// Returns a normalized copy; idempotent.
SentenceWaveform Normalized(const SentenceWaveform &s);

// 16-bit PCM mono.  "*.raw" files are headerless and read the rate from a
// "<path>.rate" sidecar; anything else must be RIFF/WAVE.
SentenceWaveform ReadWaveFile(const std::string &path);

// Clamps to [-1, 1] and writes 16-bit PCM RIFF/WAVE.
void WritePcm16Wave(const std::string &path, std::span<const double> samples,
                    int rate);

}  // namespace waveclass

#endif  // WAVECLASS_FRONTEND_WAVE_IO_H_
