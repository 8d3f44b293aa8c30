// density/em-test.cc

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
#include "base/rng.h"
#include "density/em.h"

using namespace waveclass;

namespace {

std::vector<double> GaussianBlob(int n, int d, double mean, double sigma,
                                 uint64_t seed) {
  Rng rng(seed);
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(n) * d);
  for (int i = 0; i < n * d; ++i) flat.push_back(mean + sigma * rng.Gaussian());
  return flat;
}

}  // namespace

TEST_CASE("single free-mean component is the exact closed form") {
  std::vector<double> flat = GaussianBlob(200, 3, 1.5, 2.0, 9);
  DataView data(flat, 3);
  DiagGmm model = EmTrain(data, 1, false, 7, "MFCC");

  for (int j = 0; j < 3; ++j) {
    double mean = 0.0;
    for (int64_t i = 0; i < data.n; ++i) mean += data.Row(i)[j];
    mean /= static_cast<double>(data.n);
    double var = 0.0;
    for (int64_t i = 0; i < data.n; ++i) {
      double d = data.Row(i)[j] - mean;
      var += d * d;
    }
    var /= static_cast<double>(data.n);
    CHECK(model.components()[0].mean[j] == doctest::Approx(mean).epsilon(1e-12));
    CHECK(model.components()[0].var[j] == doctest::Approx(var).epsilon(1e-12));
  }
}

TEST_CASE("single zero-mean component uses the mean of squares") {
  std::vector<double> flat = GaussianBlob(200, 2, 0.3, 1.0, 10);
  DataView data(flat, 2);
  DiagGmm model = EmTrain(data, 1, true, 7, "WAVE_DCT");
  for (int j = 0; j < 2; ++j) {
    double ms = 0.0;
    for (int64_t i = 0; i < data.n; ++i)
      ms += data.Row(i)[j] * data.Row(i)[j];
    ms /= static_cast<double>(data.n);
    CHECK(model.components()[0].mean[j] == 0.0);
    CHECK(model.components()[0].var[j] == doctest::Approx(ms).epsilon(1e-12));
  }
}

TEST_CASE("two zero-mean components recover a variance mixture") {
  // Half N(0,1), half N(0,100), one dimension.
  Rng rng(123);
  std::vector<double> flat;
  const int n = 10000;
  for (int i = 0; i < n / 2; ++i) flat.push_back(rng.Gaussian());
  for (int i = 0; i < n / 2; ++i) flat.push_back(10.0 * rng.Gaussian());
  DataView data(flat, 1);
  DiagGmm model = EmTrain(data, 2, true, 5, "WAVE_DCT");

  double v0 = model.components()[0].var[0];
  double v1 = model.components()[1].var[0];
  double lo = std::min(v0, v1), hi = std::max(v0, v1);
  CHECK(lo == doctest::Approx(1.0).epsilon(0.10));
  CHECK(hi == doctest::Approx(100.0).epsilon(0.10));
  for (const auto &comp : model.components())
    CHECK(comp.weight == doctest::Approx(0.5).epsilon(0.1));  // within 0.05 abs
  CHECK(std::abs(model.components()[0].weight - 0.5) < 0.05);
}

TEST_CASE("training log-likelihood never decreases within a run") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    int d = 1 + static_cast<int>(rng.UniformInt(4));
    int c = 1 + static_cast<int>(rng.UniformInt(3));
    int n = 60 + static_cast<int>(rng.UniformInt(100));
    bool zero_mean = rng.Uniform() < 0.5;
    std::vector<double> flat;
    for (int i = 0; i < n * d; ++i)
      flat.push_back(rng.Gaussian() * (1.0 + 2.0 * rng.Uniform()));
    EmLog log;
    EmTrain(DataView(flat, d), c, zero_mean, trial, "WAVE_DCT", {}, &log);
    CHECK(log.reseed_iterations.empty());
    for (size_t t = 1; t < log.avg_loglik.size(); ++t)
      CHECK(log.avg_loglik[t] >=
            log.avg_loglik[t - 1] - 1e-8 * std::max(1.0, std::abs(log.avg_loglik[t - 1])));
  }
}

TEST_CASE("training is deterministic under the seed") {
  std::vector<double> flat = GaussianBlob(300, 2, 0.0, 1.0, 3);
  DataView data(flat, 2);
  DiagGmm a = EmTrain(data, 4, false, 11, "MFCC");
  DiagGmm b = EmTrain(data, 4, false, 11, "MFCC");
  for (int i = 0; i < a.NumComponents(); ++i) {
    CHECK(a.components()[i].weight == b.components()[i].weight);
    CHECK(a.components()[i].mean == b.components()[i].mean);
    CHECK(a.components()[i].var == b.components()[i].var);
  }
  DiagGmm c = EmTrain(data, 4, false, 12, "MFCC");
  bool different = false;
  for (int i = 0; i < a.NumComponents() && !different; ++i)
    different = a.components()[i].mean != c.components()[i].mean;
  CHECK(different);
}

TEST_CASE("variance floor holds after training") {
  // One coordinate is (almost) constant; its variance must sit at the floor,
  // not collapse to zero.
  Rng rng(6);
  std::vector<double> flat;
  for (int i = 0; i < 500; ++i) {
    flat.push_back(rng.Gaussian());
    flat.push_back(1e-9 * rng.Gaussian());
  }
  DataView data(flat, 2);
  DiagGmm model = EmTrain(data, 2, false, 3, "MFCC");
  for (const auto &comp : model.components())
    for (double v : comp.var) CHECK(v > 0.0);
}

TEST_CASE("preconditions are enforced") {
  std::vector<double> flat = GaussianBlob(9, 1, 0.0, 1.0, 4);
  DataView data(flat, 1);
  CHECK_THROWS_AS(EmTrain(data, 2, false, 1, "MFCC"), ValidationError);
  CHECK_THROWS_AS(EmTrain(DataView(), 1, false, 1, "MFCC"), ValidationError);
}

TEST_CASE("the invocation counter advances with every training call") {
  std::vector<double> flat = GaussianBlob(50, 1, 0.0, 1.0, 2);
  DataView data(flat, 1);
  uint64_t before = EmTrainInvocations();
  EmTrain(data, 1, false, 1, "MFCC");
  CHECK(EmTrainInvocations() == before + 1);
}
