// density/full-gaussian.h

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

#ifndef WAVECLASS_DENSITY_FULL_GAUSSIAN_H_
#define WAVECLASS_DENSITY_FULL_GAUSSIAN_H_

#include <span>
#include <vector>

#include "base/matrix.h"
#include "density/em.h"
#include "density/ppca.h"

namespace waveclass {

// Single full-covariance Gaussian for the exploratory low-dimensional path
// (d <= 64); the production models are diagonal.
class FullGaussian {
 public:
  FullGaussian(std::vector<double> mean, Matrix covariance);

  static FullGaussian Fit(const DataView &data, bool zero_mean);
  static FullGaussian FromPpca(const PpcaCovariance &ppca,
                               std::span<const double> mean);

  int Dim() const { return cov_.rows; }
  const Matrix &covariance() const { return cov_; }
  const std::vector<double> &mean() const { return mean_; }

  double LogLikelihood(std::span<const double> x) const;

 private:
  std::vector<double> mean_;
  Matrix cov_;
  Matrix chol_;  // lower
  double log_det_ = 0.0;
};

}  // namespace waveclass

#endif  // WAVECLASS_DENSITY_FULL_GAUSSIAN_H_
