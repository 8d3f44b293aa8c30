// base/matrix.h

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

#ifndef WAVECLASS_BASE_MATRIX_H_
#define WAVECLASS_BASE_MATRIX_H_

#include <cstddef>
#include <vector>

namespace waveclass {

// Dense row-major matrix of doubles.  Only the small-dimension paths of the
// pipeline (PPCA, full-covariance exploration, confusion counts) use it.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double &operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  static Matrix Identity(int n);
  double Trace() const;
  bool IsSymmetric(double tol) const;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  Matrix eigenvectors;              // column j pairs with eigenvalues[j]
};

// Cyclic Jacobi for real symmetric matrices.  Throws ValidationError when the
// input is not symmetric within tol.
EigenDecomposition SymmetricEigen(const Matrix &a, double symmetry_tol = 1e-8);

// Lower-triangular Cholesky factor; throws NumericError when not positive
// definite.
Matrix CholeskyLower(const Matrix &a);

}  // namespace waveclass

#endif  // WAVECLASS_BASE_MATRIX_H_
