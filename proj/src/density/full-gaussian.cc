// density/full-gaussian.cc

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

#include "density/full-gaussian.h"

#include <cmath>

#include "base/error.h"
#include "base/math-util.h"

namespace waveclass {

namespace {
constexpr int kMaxFullCovDim = 64;
}

FullGaussian::FullGaussian(std::vector<double> mean, Matrix covariance)
    : mean_(std::move(mean)), cov_(std::move(covariance)) {
  if (cov_.rows != cov_.cols || static_cast<int>(mean_.size()) != cov_.rows)
    throw ShapeError("FullGaussian: inconsistent mean/covariance shapes");
  if (cov_.rows > kMaxFullCovDim)
    throw ValidationError("FullGaussian: full covariances supported only up to d=" +
                          std::to_string(kMaxFullCovDim));
  chol_ = CholeskyLower(cov_);
  log_det_ = 0.0;
  for (int i = 0; i < cov_.rows; ++i) log_det_ += 2.0 * std::log(chol_(i, i));
}

FullGaussian FullGaussian::Fit(const DataView &data, bool zero_mean) {
  std::vector<double> mean(data.d, 0.0);
  if (!zero_mean) {
    for (int64_t i = 0; i < data.n; ++i) {
      auto row = data.Row(i);
      for (int j = 0; j < data.d; ++j) mean[j] += row[j];
    }
    for (int j = 0; j < data.d; ++j) mean[j] /= static_cast<double>(data.n);
  }
  Matrix cov = EmpiricalCovariance(data, zero_mean);
  return FullGaussian(std::move(mean), std::move(cov));
}

FullGaussian FullGaussian::FromPpca(const PpcaCovariance &ppca,
                                    std::span<const double> mean) {
  return FullGaussian(std::vector<double>(mean.begin(), mean.end()),
                      ppca.ToFullCovariance());
}

double FullGaussian::LogLikelihood(std::span<const double> x) const {
  const int d = Dim();
  if (static_cast<int>(x.size()) != d)
    throw ShapeError("FullGaussian::LogLikelihood: dimension mismatch");
  // Solve L y = (x - mean); the quadratic form is |y|^2.
  std::vector<double> y(d);
  for (int i = 0; i < d; ++i) {
    double acc = x[i] - mean_[i];
    for (int k = 0; k < i; ++k) acc -= chol_(i, k) * y[k];
    y[i] = acc / chol_(i, i);
  }
  double quad = 0.0;
  for (double v : y) quad += v * v;
  return -0.5 * (d * kLog2Pi + log_det_ + quad);
}

}  // namespace waveclass
