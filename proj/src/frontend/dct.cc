// frontend/dct.cc

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

#include "frontend/dct.h"

#include <cmath>
#include <map>
#include <mutex>

#include "base/error.h"
#include "base/math-util.h"

namespace waveclass {

DctMatrix::DctMatrix(int n) : n_(n), c_(static_cast<size_t>(n) * n) {
  if (n <= 0) throw ValidationError("DctMatrix: size must be positive");
  for (int k = 0; k < n; ++k) {
    double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / n);
    for (int j = 0; j < n; ++j) {
      c_[static_cast<size_t>(k) * n + j] =
          scale * std::cos(kPi * (2.0 * j + 1.0) * k / (2.0 * n));
    }
  }
}

std::shared_ptr<const DctMatrix> DctMatrix::Get(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const DctMatrix>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto m = std::make_shared<const DctMatrix>(n);
  cache[n] = m;
  return m;
}

void DctMatrix::Forward(std::span<const double> in, std::span<double> out) const {
  if (static_cast<int>(in.size()) != n_ || static_cast<int>(out.size()) != n_)
    throw ShapeError("DctMatrix::Forward: bad operand size");
  for (int k = 0; k < n_; ++k) {
    const double *row = c_.data() + static_cast<size_t>(k) * n_;
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += row[j] * in[j];
    out[k] = acc;
  }
}

void DctMatrix::Inverse(std::span<const double> in, std::span<double> out) const {
  if (static_cast<int>(in.size()) != n_ || static_cast<int>(out.size()) != n_)
    throw ShapeError("DctMatrix::Inverse: bad operand size");
  for (int j = 0; j < n_; ++j) out[j] = 0.0;
  for (int k = 0; k < n_; ++k) {
    const double *row = c_.data() + static_cast<size_t>(k) * n_;
    double v = in[k];
    for (int j = 0; j < n_; ++j) out[j] += row[j] * v;
  }
}

std::vector<double> BlockDct(std::span<const double> segment, int block) {
  if (block <= 0) throw ValidationError("BlockDct: block must be positive");
  if (segment.size() % static_cast<size_t>(block) != 0)
    throw ShapeError("BlockDct: segment length not divisible by block");
  auto dct = DctMatrix::Get(block);
  std::vector<double> out(segment.size());
  for (size_t off = 0; off < segment.size(); off += block)
    dct->Forward(segment.subspan(off, block),
                 std::span<double>(out).subspan(off, block));
  return out;
}

std::vector<double> InverseBlockDct(std::span<const double> coeffs, int block) {
  if (block <= 0) throw ValidationError("InverseBlockDct: block must be positive");
  if (coeffs.size() % static_cast<size_t>(block) != 0)
    throw ShapeError("InverseBlockDct: length not divisible by block");
  auto dct = DctMatrix::Get(block);
  std::vector<double> out(coeffs.size());
  for (size_t off = 0; off < coeffs.size(); off += block)
    dct->Inverse(coeffs.subspan(off, block),
                 std::span<double>(out).subspan(off, block));
  return out;
}

FeatureMatrix WaveDctFeatures(const SentenceWaveform &sentence, int block) {
  auto frames = FrameSignal(sentence.samples, block, block);
  auto dct = DctMatrix::Get(block);
  FeatureMatrix out;
  out.basis = FeatureBasis::kWaveDct;
  out.num_frames = static_cast<int>(frames.size());
  out.dim = block;
  out.hop_seconds = block / sentence.rate;
  out.width_seconds = block / sentence.rate;
  out.rate = sentence.rate;
  out.data.resize(static_cast<size_t>(out.num_frames) * block);
  for (int i = 0; i < out.num_frames; ++i)
    dct->Forward(frames[i], out.MutableFrame(i));
  return out;
}

}  // namespace waveclass
