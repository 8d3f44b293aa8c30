// density/diag-gmm.h

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

#ifndef WAVECLASS_DENSITY_DIAG_GMM_H_
#define WAVECLASS_DENSITY_DIAG_GMM_H_

#include <span>
#include <string>
#include <vector>

namespace waveclass {

struct DiagGaussianComponent {
  double weight = 1.0;
  std::vector<double> mean;
  std::vector<double> var;  // strictly positive
};

// Gaussian mixture with diagonal covariances, evaluated in a declared
// feature basis.  zero_mean models pin every component mean at the origin
// (a waveform is perceived the same as its negation).
class DiagGmm {
 public:
  DiagGmm() = default;
  DiagGmm(std::vector<DiagGaussianComponent> components, std::string basis,
          bool zero_mean);

  int NumComponents() const { return static_cast<int>(components_.size()); }
  int Dim() const { return dim_; }
  bool zero_mean() const { return zero_mean_; }
  const std::string &basis() const { return basis_; }
  const std::vector<DiagGaussianComponent> &components() const {
    return components_;
  }

  // Log-density at x: per-component log terms combined by log-sum-exp.
  double LogLikelihood(std::span<const double> x) const;

  // Checks weight normalisation, variance positivity and the zero-mean
  // constraint; throws ValidationError on violation.
  void Validate() const;

 private:
  void RefreshConstants();

  std::vector<DiagGaussianComponent> components_;
  std::string basis_;
  bool zero_mean_ = false;
  int dim_ = 0;
  // log w_i - d/2 log(2 pi) - 1/2 sum_j log var_ij, per component.
  std::vector<double> log_const_;
  std::vector<double> inv_var_;  // flattened c x d
};

}  // namespace waveclass

#endif  // WAVECLASS_DENSITY_DIAG_GMM_H_
