// density/ppca.h

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

#ifndef WAVECLASS_DENSITY_PPCA_H_
#define WAVECLASS_DENSITY_PPCA_H_

#include "base/matrix.h"
#include "density/em.h"

namespace waveclass {

// Rank-q covariance regularisation: Sigma = r^2 I + W W^T.  r^2 is the mean
// of the d-q discarded eigenvalues of the empirical covariance; column i of
// W is sqrt(lambda_i - r^2) v_i over the descending eigenpairs, which keeps
// the leading eigenstructure and the total trace.
struct PpcaCovariance {
  int q = 0;
  Matrix w;       // d x q
  double r2 = 0.0;

  int Dim() const { return w.rows; }
  Matrix ToFullCovariance() const;
};

// Requires 1 <= q < d and a symmetric positive semidefinite input.
PpcaCovariance PpcaFromCovariance(const Matrix &sigma_hat, int q);

// Maximum-likelihood covariance of the data (about the origin if zero_mean).
Matrix EmpiricalCovariance(const DataView &data, bool zero_mean);

}  // namespace waveclass

#endif  // WAVECLASS_DENSITY_PPCA_H_
