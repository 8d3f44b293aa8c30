// base/matrix.cc

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

#include "base/matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "base/error.h"

namespace waveclass {

Matrix Matrix::Identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::Trace() const {
  double t = 0.0;
  for (int i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::IsSymmetric(double tol) const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

EigenDecomposition SymmetricEigen(const Matrix &a, double symmetry_tol) {
  if (a.rows != a.cols) throw ShapeError("SymmetricEigen: matrix not square");
  if (!a.IsSymmetric(symmetry_tol))
    throw ValidationError("SymmetricEigen: matrix not symmetric");
  const int n = a.rows;
  Matrix s = a;
  Matrix v = Matrix::Identity(n);

  auto off_norm = [&]() {
    double o = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) o += s(i, j) * s(i, j);
    return std::sqrt(2.0 * o);
  };
  double frob = 0.0;
  for (double x : s.data) frob += x * x;
  frob = std::sqrt(frob);
  const double thresh = std::max(1e-300, 1e-14 * frob);

  for (int sweep = 0; sweep < 100 && off_norm() > thresh; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = s(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        double app = s(p, p), aqq = s(q, q);
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double sn = t * c;
        for (int k = 0; k < n; ++k) {
          double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          double spk = s(p, k), sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return s(i, i) > s(j, j); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = s(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

Matrix CholeskyLower(const Matrix &a) {
  if (a.rows != a.cols) throw ShapeError("CholeskyLower: matrix not square");
  const int n = a.rows;
  Matrix l(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = a(i, j);
      for (int k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
      if (i == j) {
        if (sum <= 0.0)
          throw NumericError("CholeskyLower: matrix not positive definite");
        l(i, i) = std::sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  return l;
}

}  // namespace waveclass
