// frontend/dct.h

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

#ifndef WAVECLASS_FRONTEND_DCT_H_
#define WAVECLASS_FRONTEND_DCT_H_

#include <memory>
#include <span>
#include <vector>

#include "frontend/feature-matrix.h"
#include "frontend/wave-io.h"

namespace waveclass {

// Orthonormal even type-II DCT:
//   C[k][j] = sqrt((k == 0 ? 1 : 2) / n) * cos(pi * (2j+1) * k / (2n)).
// The orthonormality matters: it carries trace-d normalisation and the
// isotropy of white noise into the feature domain unchanged.
class DctMatrix {
 public:
  explicit DctMatrix(int n);

  // Shared cached instance per size.
  static std::shared_ptr<const DctMatrix> Get(int n);

  int size() const { return n_; }
  double Coeff(int k, int j) const { return c_[static_cast<size_t>(k) * n_ + j]; }

  void Forward(std::span<const double> in, std::span<double> out) const;
  // The inverse is the transpose.
  void Inverse(std::span<const double> in, std::span<double> out) const;

 private:
  int n_;
  std::vector<double> c_;
};

// Independent orthonormal DCT per consecutive block; the implied basis is
// block-diagonal.  Segment length must be divisible by the block size.
std::vector<double> BlockDct(std::span<const double> segment, int block);
std::vector<double> InverseBlockDct(std::span<const double> coeffs, int block);

// Non-overlapping block frames of the sentence, each transformed in place.
FeatureMatrix WaveDctFeatures(const SentenceWaveform &sentence, int block = 160);

}  // namespace waveclass

#endif  // WAVECLASS_FRONTEND_DCT_H_
