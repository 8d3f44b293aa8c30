// adapt/adapt-test.cc

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

#include <algorithm>
#include <cmath>

#include "adapt/adapt.h"
#include "base/error.h"
#include "base/rng.h"

using namespace waveclass;

namespace {

DiagGmm TwoComponent(std::vector<double> var1, std::vector<double> var2,
                     std::vector<double> mean1 = {},
                     const std::string &basis = "WAVE_DCT") {
  bool zero_mean = mean1.empty();
  int d = static_cast<int>(var1.size());
  DiagGaussianComponent a, b;
  a.weight = 0.4;
  b.weight = 0.6;
  a.var = std::move(var1);
  b.var = std::move(var2);
  a.mean = zero_mean ? std::vector<double>(d, 0.0) : std::move(mean1);
  b.mean = std::vector<double>(d, 0.0);
  return DiagGmm({a, b}, basis, zero_mean);
}

}  // namespace

TEST_CASE("adaptation arithmetic follows the covariance rule") {
  DiagGmm model = TwoComponent({2.0, 0.5}, {1.0, 1.0});
  NoiseSpec noise = WhiteNoiseSpec(2, 1.0, "WAVE_DCT");
  DiagGmm adapted = AdaptModel(model, noise);

  CHECK(adapted.components()[0].var[0] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(adapted.components()[0].var[1] == doctest::Approx(0.75).epsilon(1e-15));
  // Isotropic fixed point: unit variances stay unit under white noise.
  CHECK(adapted.components()[1].var[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(adapted.components()[1].var[1] == doctest::Approx(1.0).epsilon(1e-15));

  // Weights and component count are untouched; the input stays intact.
  CHECK(adapted.components()[0].weight == model.components()[0].weight);
  CHECK(adapted.NumComponents() == model.NumComponents());
  CHECK(model.components()[0].var[0] == 2.0);
}

TEST_CASE("sigma2 = 0 returns the model bit-exactly") {
  DiagGmm model = TwoComponent({1.7, 0.3}, {0.9, 2.2});
  DiagGmm adapted = AdaptModel(model, WhiteNoiseSpec(2, 0.0, "WAVE_DCT"));
  for (int i = 0; i < model.NumComponents(); ++i) {
    CHECK(adapted.components()[i].var == model.components()[i].var);
    CHECK(adapted.components()[i].mean == model.components()[i].mean);
  }
}

TEST_CASE("means scale by 1/sqrt(1+sigma2)") {
  DiagGmm model = TwoComponent({1.0, 1.0}, {2.0, 2.0}, {0.8, -0.4});
  double sigma2 = 3.0;
  DiagGmm adapted = AdaptModel(model, WhiteNoiseSpec(2, sigma2, "WAVE_DCT"));
  CHECK(adapted.components()[0].mean[0] ==
        doctest::Approx(0.8 / 2.0).epsilon(1e-15));
  CHECK(adapted.components()[0].mean[1] ==
        doctest::Approx(-0.4 / 2.0).epsilon(1e-15));
}

TEST_CASE("composition identity on the unnormalized covariance") {
  // Adapting D then multiplying back by 1+sigma2 must equal D + sigma2 N,
  // coordinate by coordinate.
  Rng rng(8);
  const int d = 16;
  std::vector<double> var(d), pattern(d);
  for (int j = 0; j < d; ++j) {
    var[j] = 0.2 + rng.Uniform();
    pattern[j] = 0.5 + rng.Uniform();
  }
  double psum = 0.0;
  for (double v : pattern) psum += v;
  for (double &v : pattern) v *= d / psum;

  DiagGaussianComponent comp;
  comp.weight = 1.0;
  comp.mean.assign(d, 0.0);
  comp.var = var;
  DiagGmm model({comp}, "WAVE_DCT", true);
  double sigma2 = 0.37;
  NoiseSpec noise = NoiseSpecForDim(pattern, d, sigma2, "WAVE_DCT", "test");
  DiagGmm adapted = AdaptModel(model, noise);
  for (int j = 0; j < d; ++j) {
    double unnormalized = adapted.components()[0].var[j] * (1.0 + sigma2);
    CHECK(unnormalized ==
          doctest::Approx(var[j] + sigma2 * pattern[j]).epsilon(1e-14));
  }
}

TEST_CASE("white noise flattens the variance dynamic range") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 8;
    std::vector<double> var(d);
    for (double &v : var) v = 0.05 + 4.0 * rng.Uniform();
    DiagGaussianComponent comp;
    comp.weight = 1.0;
    comp.mean.assign(d, 0.0);
    comp.var = var;
    DiagGmm model({comp}, "WAVE_DCT", true);
    double sigma2 = 2.0 * rng.Uniform();
    DiagGmm adapted = AdaptModel(model, WhiteNoiseSpec(d, sigma2, "WAVE_DCT"));
    auto range = [](const std::vector<double> &v) {
      return *std::max_element(v.begin(), v.end()) /
             *std::min_element(v.begin(), v.end());
    };
    CHECK(range(adapted.components()[0].var) <= range(var) + 1e-12);
  }
}

TEST_CASE("the strong-noise limit approaches the noise covariance") {
  DiagGmm model = TwoComponent({2.0, 0.5, 1.0}, {0.8, 1.4, 0.6});
  std::vector<double> pattern = {1.5, 0.75, 0.75};
  NoiseSpec noise = NoiseSpecForDim(pattern, 3, 1e12, "WAVE_DCT", "test");
  DiagGmm adapted = AdaptModel(model, noise);
  for (const auto &comp : adapted.components())
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(comp.var[j] - pattern[j]) < 1e-9);
}

TEST_CASE("adaptation errors") {
  DiagGmm model = TwoComponent({1.0}, {2.0});
  CHECK_THROWS_AS(AdaptModel(model, WhiteNoiseSpec(1, -0.5, "WAVE_DCT")),
                  ValidationError);
  CHECK_THROWS_AS(AdaptModel(model, WhiteNoiseSpec(1, 1.0, "MFCC")),
                  ConfigError);  // basis mismatch
  CHECK_THROWS_AS(AdaptModel(model, WhiteNoiseSpec(2, 1.0, "WAVE_DCT")),
                  ShapeError);

  // Cepstral models are not adaptable; CMVN or matched retraining covers them.
  DiagGmm cepstral = TwoComponent({1.0}, {2.0}, {0.5}, "MFCC");
  CHECK_THROWS_AS(AdaptModel(cepstral, WhiteNoiseSpec(1, 1.0, "MFCC")),
                  ConfigError);
}

TEST_CASE("bank adaptation tiles the frame pattern and records provenance") {
  ModelBank bank;
  bank.basis = "WAVE_DCT";
  bank.frame_dim = 2;
  bank.classes = {"a"};
  bank.sectors = {'C'};
  bank.frame_counts = {1, 3};
  bank.component_counts = {2};
  bank.component_weights = {1.0};
  bank.zero_mean = true;
  bank.Insert("a", 'C', 1, 2, TwoComponent({1.0, 2.0}, {0.5, 0.25}));
  bank.Insert("a", 'C', 3, 2,
              TwoComponent({1.0, 2.0, 1.0, 2.0, 1.0, 2.0},
                           {0.5, 0.25, 0.5, 0.25, 0.5, 0.25}));

  NoiseSpec frame_noise =
      NoiseSpecForDim(std::vector<double>{1.2, 0.8}, 2, 1.0, "WAVE_DCT", "t");
  ModelBank adapted = AdaptBank(bank, frame_noise);
  CHECK(adapted.adapted);
  CHECK(adapted.sigma2 == 1.0);
  CHECK(adapted.noise_pattern == std::vector<double>{1.2, 0.8});
  // f=3 model sees the tiled pattern.
  const DiagGmm &m3 = adapted.Model("a", 'C', 3, 2);
  CHECK(m3.components()[0].var[0] == doctest::Approx((1.0 + 1.2) / 2.0));
  CHECK(m3.components()[0].var[3] == doctest::Approx((2.0 + 0.8) / 2.0));
  CHECK(m3.components()[0].var[4] == doctest::Approx((1.0 + 1.2) / 2.0));
}

TEST_CASE("the adapted-bank cache returns one instance per condition") {
  auto bank = std::make_shared<const ModelBank>([] {
    ModelBank b;
    b.basis = "WAVE_DCT";
    b.frame_dim = 1;
    b.classes = {"a"};
    b.sectors = {'C'};
    b.frame_counts = {1};
    b.component_counts = {2};
    b.component_weights = {1.0};
    b.zero_mean = true;
    b.Insert("a", 'C', 1, 2, TwoComponent({1.0}, {2.0}));
    return b;
  }());
  AdaptedBankCache cache(bank);
  NoiseSpec n1 = WhiteNoiseSpec(1, 1.0, "WAVE_DCT");
  NoiseSpec n2 = WhiteNoiseSpec(1, 0.25, "WAVE_DCT");
  auto a = cache.Get(n1);
  auto b = cache.Get(n1);
  auto c = cache.Get(n2);
  CHECK(a.get() == b.get());
  CHECK(a.get() != c.get());
  CHECK(a->sigma2 == 1.0);
}
