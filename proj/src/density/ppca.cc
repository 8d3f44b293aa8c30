// density/ppca.cc

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

#include "density/ppca.h"

#include <cmath>

#include "base/error.h"

namespace waveclass {

Matrix PpcaCovariance::ToFullCovariance() const {
  const int d = w.rows;
  Matrix out(d, d);
  for (int i = 0; i < d; ++i) {
    out(i, i) = r2;
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int k = 0; k < q; ++k) acc += w(i, k) * w(j, k);
      out(i, j) += acc;
    }
  }
  return out;
}

PpcaCovariance PpcaFromCovariance(const Matrix &sigma_hat, int q) {
  const int d = sigma_hat.rows;
  if (sigma_hat.rows != sigma_hat.cols)
    throw ShapeError("PpcaFromCovariance: matrix not square");
  if (!sigma_hat.IsSymmetric(1e-8))
    throw ValidationError("PpcaFromCovariance: matrix not symmetric");
  if (q < 1 || q >= d)
    throw ValidationError("PpcaFromCovariance: need 1 <= q < d");

  EigenDecomposition eig = SymmetricEigen(sigma_hat);
  PpcaCovariance out;
  out.q = q;
  out.r2 = 0.0;
  for (int k = q; k < d; ++k) out.r2 += eig.eigenvalues[k];
  out.r2 /= (d - q);
  // Column i carries sqrt(lambda_i - r^2) v_i, so that r^2 I + W W^T keeps
  // both the leading eigenpairs and the trace of the empirical covariance.
  out.w = Matrix(d, q);
  for (int k = 0; k < q; ++k) {
    double s = std::sqrt(std::max(eig.eigenvalues[k] - out.r2, 0.0));
    for (int i = 0; i < d; ++i) out.w(i, k) = s * eig.eigenvectors(i, k);
  }
  return out;
}

Matrix EmpiricalCovariance(const DataView &data, bool zero_mean) {
  if (data.n <= 0 || data.d <= 0)
    throw ValidationError("EmpiricalCovariance: empty data");
  const int d = data.d;
  std::vector<double> mean(d, 0.0);
  if (!zero_mean) {
    for (int64_t i = 0; i < data.n; ++i) {
      auto row = data.Row(i);
      for (int j = 0; j < d; ++j) mean[j] += row[j];
    }
    for (int j = 0; j < d; ++j) mean[j] /= static_cast<double>(data.n);
  }
  Matrix cov(d, d);
  std::vector<double> centered(d);
  for (int64_t i = 0; i < data.n; ++i) {
    auto row = data.Row(i);
    for (int j = 0; j < d; ++j) centered[j] = row[j] - mean[j];
    for (int r = 0; r < d; ++r)
      for (int s = r; s < d; ++s) cov(r, s) += centered[r] * centered[s];
  }
  for (int r = 0; r < d; ++r)
    for (int s = r; s < d; ++s) {
      cov(r, s) /= static_cast<double>(data.n);
      cov(s, r) = cov(r, s);
    }
  return cov;
}

}  // namespace waveclass
