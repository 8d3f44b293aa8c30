// frontend/dct-test.cc

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
#include "base/rng.h"
#include "frontend/dct.h"
#include "oracles.h"

using namespace waveclass;

TEST_CASE("constant block concentrates on coefficient 0") {
  const int block = 160;
  const double a = 0.7;
  std::vector<double> x(block, a);
  std::vector<double> y = BlockDct(x, block);
  CHECK(y[0] == doctest::Approx(a * std::sqrt(160.0)).epsilon(1e-12));
  for (int k = 1; k < block; ++k) CHECK(std::abs(y[k]) < 1e-9);
}

TEST_CASE("unit impulse maps to the first column of the frozen 4-point matrix") {
  std::vector<double> impulse = {1.0, 0.0, 0.0, 0.0};
  std::vector<double> y = BlockDct(impulse, 4);
  for (int k = 0; k < 4; ++k)
    CHECK(y[k] == doctest::Approx(oracle::kDct4[k][0]).epsilon(1e-14));
}

TEST_CASE("blocks transform independently") {
  Rng rng(5);
  std::vector<double> two(8);
  for (double &v : two) v = rng.Gaussian();
  std::vector<double> both = BlockDct(two, 4);
  std::vector<double> first =
      BlockDct(std::span<const double>(two).subspan(0, 4), 4);
  std::vector<double> second =
      BlockDct(std::span<const double>(two).subspan(4, 4), 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(both[k] == first[k]);
    CHECK(both[4 + k] == second[k]);
  }
}

TEST_CASE("orthonormality probed on all 160 impulses") {
  const int n = 160;
  auto dct = DctMatrix::Get(n);
  // Columns of C from impulse responses; check C^T C = I.
  std::vector<std::vector<double>> cols(n, std::vector<double>(n));
  std::vector<double> e(n, 0.0), y(n);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    dct->Forward(e, y);
    e[j] = 0.0;
    cols[j] = y;
  }
  double max_dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double dot = Dot(cols[i], cols[j]);
      max_dev = std::max(max_dev, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  CHECK(max_dev < 1e-10);
}

TEST_CASE("per-block Parseval and inverse recovery") {
  Rng rng(17);
  std::vector<double> x(480);
  for (double &v : x) v = rng.Gaussian();
  std::vector<double> y = BlockDct(x, 160);
  for (int b = 0; b < 3; ++b) {
    double ein = 0.0, eout = 0.0;
    for (int j = 0; j < 160; ++j) {
      ein += x[b * 160 + j] * x[b * 160 + j];
      eout += y[b * 160 + j] * y[b * 160 + j];
    }
    CHECK(std::abs(ein - eout) < 1e-9);
  }
  std::vector<double> back = InverseBlockDct(y, 160);
  for (size_t i = 0; i < x.size(); ++i) CHECK(std::abs(back[i] - x[i]) < 1e-9);
}

TEST_CASE("non-divisible segment length is a shape error") {
  std::vector<double> x(150, 1.0);
  CHECK_THROWS_AS(BlockDct(x, 160), ShapeError);
}

TEST_CASE("WaveDctFeatures frames and pads the sentence") {
  SentenceWaveform wave;
  wave.sentence_id = "t";
  wave.rate = 16000.0;
  wave.samples.assign(400, 1.0);
  wave.normalized = true;
  FeatureMatrix m = WaveDctFeatures(wave, 160);
  CHECK(m.num_frames == 3);
  CHECK(m.dim == 160);
  CHECK(m.basis == FeatureBasis::kWaveDct);
  CHECK(m.hop_seconds == doctest::Approx(0.01));
  // Third frame holds 80 ones zero-padded to 160.
  std::vector<double> tail(160, 0.0);
  for (int j = 0; j < 80; ++j) tail[j] = 1.0;
  std::vector<double> expect = BlockDct(tail, 160);
  auto frame = m.Frame(2);
  for (int j = 0; j < 160; ++j)
    CHECK(frame[j] == doctest::Approx(expect[j]).epsilon(1e-12));
}
