// base/base-test.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "base/error.h"
#include "base/math-util.h"
#include "base/matrix.h"
#include "base/rng.h"
#include "base/text-io.h"
#include "base/thread-pool.h"

using namespace waveclass;

TEST_CASE("LogSumExp matches direct evaluation and survives offsets") {
  std::vector<double> x = {-1.0, -3.0};
  double direct = std::log(std::exp(-1.0) + std::exp(-3.0));
  CHECK(LogSumExp(x) == doctest::Approx(direct).epsilon(1e-14));

  std::vector<double> shifted = {-1001.0, -1003.0};
  CHECK(LogSumExp(shifted) == doctest::Approx(direct - 1000.0).epsilon(1e-12));

  CHECK(std::isinf(LogSumExp(std::vector<double>{})));
}

TEST_CASE("Rng streams are reproducible and seed derivation separates tags") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.Uniform() == b.Uniform());
    CHECK(a.Gaussian() == b.Gaussian());
  }
  CHECK(DeriveSeed(1, "x") != DeriveSeed(1, "y"));
  CHECK(DeriveSeed(1, "x") != DeriveSeed(2, "x"));
  CHECK(DeriveSeed(7, "train/s1") == DeriveSeed(7, "train/s1"));
}

TEST_CASE("Gaussian variates have roughly unit variance") {
  Rng rng(7);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double g = rng.Gaussian();
    sum += g;
    sum2 += g * g;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("SymmetricEigen reconstructs the matrix") {
  const int d = 6;
  Matrix m(d, d);
  Rng rng(3);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      double v = rng.Gaussian();
      m(i, j) = v;
      m(j, i) = v;
    }
  EigenDecomposition eig = SymmetricEigen(m);
  for (int k = 0; k + 1 < d; ++k)
    CHECK(eig.eigenvalues[k] >= eig.eigenvalues[k + 1]);
  // V diag(lambda) V^T == m
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int k = 0; k < d; ++k)
        acc += eig.eigenvectors(i, k) * eig.eigenvalues[k] *
               eig.eigenvectors(j, k);
      CHECK(acc == doctest::Approx(m(i, j)).epsilon(1e-10));
    }
  Matrix asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(SymmetricEigen(asym), ValidationError);
}

TEST_CASE("CholeskyLower factors and rejects indefinite input") {
  Matrix m(2, 2);
  m(0, 0) = 4.0;
  m(0, 1) = m(1, 0) = 2.0;
  m(1, 1) = 3.0;
  Matrix l = CholeskyLower(m);
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(1, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));

  Matrix bad(2, 2);
  bad(0, 0) = 1.0;
  bad(1, 1) = -1.0;
  CHECK_THROWS_AS(CholeskyLower(bad), NumericError);
}

TEST_CASE("FormatDouble round-trips bit-exactly") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    double v = std::exp(40.0 * (rng.Uniform() - 0.5)) *
               (rng.Uniform() < 0.5 ? -1.0 : 1.0);
    double back = ParseDouble(FormatDouble(v), "test");
    CHECK(back == v);
  }
}

TEST_CASE("RunParallel computes every slot once, any worker count") {
  for (int workers : {1, 3, 8}) {
    std::vector<int> hits(100, 0);
    RunParallel(100, workers, [&](int i) { hits[i] += i; });
    for (int i = 0; i < 100; ++i) CHECK(hits[i] == i);
  }
}

TEST_CASE("RunParallel propagates task exceptions") {
  CHECK_THROWS_AS(
      RunParallel(4, 2, [](int i) {
        if (i == 2) throw ValidationError("boom");
      }),
      ValidationError);
}
