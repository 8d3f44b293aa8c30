// density/diag-gmm.cc

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

#include "density/diag-gmm.h"

#include <cmath>

#include "base/error.h"
#include "base/math-util.h"

namespace waveclass {

DiagGmm::DiagGmm(std::vector<DiagGaussianComponent> components,
                 std::string basis, bool zero_mean)
    : components_(std::move(components)),
      basis_(std::move(basis)),
      zero_mean_(zero_mean) {
  if (components_.empty())
    throw ValidationError("DiagGmm: no components");
  dim_ = static_cast<int>(components_[0].var.size());
  Validate();
  RefreshConstants();
}

void DiagGmm::Validate() const {
  double weight_sum = 0.0;
  for (const auto &c : components_) {
    if (static_cast<int>(c.var.size()) != dim_ ||
        static_cast<int>(c.mean.size()) != dim_)
      throw ValidationError("DiagGmm: inconsistent component dimensions");
    if (c.weight <= 0.0) throw ValidationError("DiagGmm: non-positive weight");
    weight_sum += c.weight;
    for (double v : c.var)
      if (!(v > 0.0)) throw ValidationError("DiagGmm: non-positive variance");
    if (zero_mean_)
      for (double m : c.mean)
        if (m != 0.0)
          throw ValidationError("DiagGmm: zero_mean model with nonzero mean");
  }
  if (std::abs(weight_sum - 1.0) > 1e-10)
    throw ValidationError("DiagGmm: weights must sum to 1");
}

void DiagGmm::RefreshConstants() {
  const int c = NumComponents();
  log_const_.resize(c);
  inv_var_.resize(static_cast<size_t>(c) * dim_);
  for (int i = 0; i < c; ++i) {
    double log_det = 0.0;
    for (int j = 0; j < dim_; ++j) {
      double v = components_[i].var[j];
      log_det += std::log(v);
      inv_var_[static_cast<size_t>(i) * dim_ + j] = 1.0 / v;
    }
    log_const_[i] =
        std::log(components_[i].weight) - 0.5 * dim_ * kLog2Pi - 0.5 * log_det;
  }
}

double DiagGmm::LogLikelihood(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw ShapeError("DiagGmm::LogLikelihood: dimension mismatch");
  const int c = NumComponents();
  std::vector<double> terms(c);
  for (int i = 0; i < c; ++i) {
    const double *iv = inv_var_.data() + static_cast<size_t>(i) * dim_;
    double quad = 0.0;
    if (zero_mean_) {
      for (int j = 0; j < dim_; ++j) quad += x[j] * x[j] * iv[j];
    } else {
      const double *mu = components_[i].mean.data();
      for (int j = 0; j < dim_; ++j) {
        double d = x[j] - mu[j];
        quad += d * d * iv[j];
      }
    }
    terms[i] = log_const_[i] - 0.5 * quad;
  }
  return LogSumExp(terms);
}

}  // namespace waveclass
