// density/density-test.cc

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
#include <filesystem>
#include <fstream>

#include "base/error.h"
#include "base/rng.h"
#include "density/diag-gmm.h"
#include "density/full-gaussian.h"
#include "density/model-average.h"
#include "density/model-bank.h"
#include "density/ppca.h"
#include "oracles.h"

using namespace waveclass;

namespace {

DiagGmm RandomGmm(int c, int d, uint64_t seed, bool zero_mean = false) {
  Rng rng(seed);
  std::vector<DiagGaussianComponent> comps(c);
  double wsum = 0.0;
  for (auto &comp : comps) {
    comp.weight = 0.2 + rng.Uniform();
    wsum += comp.weight;
    comp.mean.resize(d);
    comp.var.resize(d);
    for (int j = 0; j < d; ++j) {
      comp.mean[j] = zero_mean ? 0.0 : rng.Gaussian();
      comp.var[j] = 0.3 + rng.Uniform();
    }
  }
  for (auto &comp : comps) comp.weight /= wsum;
  return DiagGmm(std::move(comps), "WAVE_DCT", zero_mean);
}

}  // namespace

TEST_CASE("standard normal log-density at the origin") {
  DiagGaussianComponent comp;
  comp.weight = 1.0;
  comp.mean = {0.0};
  comp.var = {1.0};
  DiagGmm gmm({comp}, "WAVE_DCT", true);
  CHECK(gmm.LogLikelihood(std::vector<double>{0.0}) ==
        doctest::Approx(-0.91893853320467267).epsilon(1e-14));
}

TEST_CASE("duplicated components leave the log-density unchanged") {
  DiagGaussianComponent a;
  a.weight = 0.5;
  a.mean = {0.4, -0.2};
  a.var = {1.5, 0.7};
  DiagGaussianComponent b = a;
  DiagGmm one({[&] { auto c = a; c.weight = 1.0; return c; }()}, "MFCC", false);
  DiagGmm two({a, b}, "MFCC", false);
  std::vector<double> x = {0.3, 0.1};
  CHECK(two.LogLikelihood(x) == doctest::Approx(one.LogLikelihood(x)).epsilon(1e-14));
}

TEST_CASE("log-likelihood matches the direct-summation oracle") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    DiagGmm gmm = RandomGmm(3, 4, seed);
    Rng rng(seed + 100);
    std::vector<double> x(4);
    for (double &v : x) v = rng.Gaussian();
    long double want = oracle::BruteForceGmmLogDensity(gmm, x);
    CHECK(gmm.LogLikelihood(x) ==
          doctest::Approx(static_cast<double>(want)).epsilon(1e-10));
  }
}

TEST_CASE("zero-mean models have exact sign-flip symmetry") {
  DiagGmm gmm = RandomGmm(4, 6, 42, /*zero_mean=*/true);
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    std::vector<double> x(6), neg(6);
    for (int j = 0; j < 6; ++j) {
      x[j] = rng.Gaussian();
      neg[j] = -x[j];
    }
    CHECK(gmm.LogLikelihood(x) == gmm.LogLikelihood(neg));
  }
}

TEST_CASE("DiagGmm validation") {
  DiagGaussianComponent comp;
  comp.weight = 0.7;  // does not sum to one
  comp.mean = {0.0};
  comp.var = {1.0};
  CHECK_THROWS_AS(DiagGmm({comp}, "MFCC", false), ValidationError);

  comp.weight = 1.0;
  comp.var = {0.0};
  CHECK_THROWS_AS(DiagGmm({comp}, "MFCC", false), ValidationError);

  comp.var = {1.0};
  comp.mean = {0.5};
  CHECK_THROWS_AS(DiagGmm({comp}, "WAVE_DCT", true), ValidationError);

  DiagGmm ok({[&] { auto c = comp; c.mean = {0.0}; return c; }()}, "WAVE_DCT",
             true);
  CHECK_THROWS_AS(ok.LogLikelihood(std::vector<double>{1.0, 2.0}), ShapeError);
}

TEST_CASE("model average reduces and evaluates per the definition") {
  std::vector<double> single = {-7.5};
  std::vector<double> u1 = {1.0};
  CHECK(CombineModelLogLiks(single, u1) == -7.5);

  std::vector<double> equal = {-3.0, -3.0};
  std::vector<double> u2 = {0.5, 0.5};
  CHECK(CombineModelLogLiks(equal, u2) == doctest::Approx(-3.0).epsilon(1e-14));

  // log(0.5 e^-1 + 0.5 e^-3), frozen from direct evaluation.
  std::vector<double> pair = {-1.0, -3.0};
  CHECK(CombineModelLogLiks(pair, u2) ==
        doctest::Approx(-1.5662191695169727).epsilon(1e-13));

  // Uniform weights are permutation-invariant.
  std::vector<double> swapped = {-3.0, -1.0};
  CHECK(CombineModelLogLiks(pair, u2) ==
        doctest::Approx(CombineModelLogLiks(swapped, u2)).epsilon(1e-15));

  CHECK_THROWS_AS(CombineModelLogLiks({}, {}), ConfigError);
  std::vector<double> bad_u = {0.9, 0.9};
  CHECK_THROWS_AS(CombineModelLogLiks(pair, bad_u), ValidationError);
}

TEST_CASE("posterior weights follow the development-set densities") {
  DiagGmm m1 = RandomGmm(1, 2, 5);
  std::vector<const DiagGmm *> one = {&m1};
  std::vector<double> flat = {0.1, 0.2, 0.3, -0.1, 0.2, 0.0};
  DataView dev(flat, 2);
  auto u = PosteriorWeights(one, dev);
  REQUIRE(u.size() == 1);
  CHECK(u[0] == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<const DiagGmm *> twins = {&m1, &m1};
  auto u2 = PosteriorWeights(twins, dev);
  CHECK(u2[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(u2[1] == doctest::Approx(0.5).epsilon(1e-12));

  // Three points, two distinct single Gaussians: compare to the direct
  // evaluation of the defining ratio in long double.
  DiagGmm m2 = RandomGmm(1, 2, 6);
  std::vector<const DiagGmm *> models = {&m1, &m2};
  long double n1 = 0.0L, n2 = 0.0L;
  for (int i = 0; i < 3; ++i) {
    std::span<const double> x = dev.Row(i);
    n1 += std::exp(oracle::BruteForceGmmLogDensity(m1, x));
    n2 += std::exp(oracle::BruteForceGmmLogDensity(m2, x));
  }
  auto u3 = PosteriorWeights(models, DataView(flat, 2));
  CHECK(u3[0] == doctest::Approx(static_cast<double>(n1 / (n1 + n2))).epsilon(1e-10));
  CHECK(u3[1] == doctest::Approx(static_cast<double>(n2 / (n1 + n2))).epsilon(1e-10));

  CHECK_THROWS_AS(PosteriorWeights(models, DataView()), ValidationError);
}

TEST_CASE("PPCA arithmetic on a known spectrum") {
  // Diagonal covariance with eigenvalues {4, 2, 1, 1}.
  Matrix sigma(4, 4);
  sigma(0, 0) = 4.0;
  sigma(1, 1) = 2.0;
  sigma(2, 2) = 1.0;
  sigma(3, 3) = 1.0;
  PpcaCovariance ppca = PpcaFromCovariance(sigma, 2);
  CHECK(ppca.r2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ppca.ToFullCovariance().Trace() == doctest::Approx(8.0).epsilon(1e-9));

  PpcaCovariance qmax = PpcaFromCovariance(sigma, 3);
  CHECK(qmax.r2 == doctest::Approx(1.0).epsilon(1e-12));  // r2 = lambda_d

  Matrix asym(3, 3);
  asym(0, 1) = 0.5;
  CHECK_THROWS_AS(PpcaFromCovariance(asym, 1), ValidationError);
  CHECK_THROWS_AS(PpcaFromCovariance(sigma, 0), ValidationError);
  CHECK_THROWS_AS(PpcaFromCovariance(sigma, 4), ValidationError);
}

TEST_CASE("PPCA preserves the trace of random SPD matrices") {
  const int d = 6;
  std::vector<double> flat = oracle::RandomSpdMatrix(d, 77);
  Matrix sigma(d, d);
  sigma.data = flat;
  PpcaCovariance ppca = PpcaFromCovariance(sigma, 3);
  CHECK(ppca.ToFullCovariance().Trace() ==
        doctest::Approx(sigma.Trace()).epsilon(1e-9));
  // The reconstruction keeps the top eigenpairs of the input exactly.
  EigenDecomposition eig = SymmetricEigen(sigma);
  EigenDecomposition reig = SymmetricEigen(ppca.ToFullCovariance());
  for (int k = 0; k < 3; ++k)
    CHECK(reig.eigenvalues[k] ==
          doctest::Approx(eig.eigenvalues[k]).epsilon(1e-9));
}

TEST_CASE("full Gaussian agrees with the diagonal formula and PPCA") {
  // Diagonal covariance: full and diagonal paths must agree.
  Matrix cov(3, 3);
  cov(0, 0) = 2.0;
  cov(1, 1) = 0.5;
  cov(2, 2) = 1.25;
  FullGaussian full({0.1, -0.2, 0.3}, cov);
  std::vector<double> x = {0.4, 0.0, -0.6};
  long double want = oracle::DiagGaussianLogDensity(
      std::vector<double>{0.1, -0.2, 0.3}, std::vector<double>{2.0, 0.5, 1.25},
      x);
  CHECK(full.LogLikelihood(x) ==
        doctest::Approx(static_cast<double>(want)).epsilon(1e-12));

  // Fitting recovers mean and covariance in closed form.
  Rng rng(15);
  std::vector<double> flat;
  for (int i = 0; i < 500; ++i) {
    flat.push_back(1.0 + rng.Gaussian());
    flat.push_back(-2.0 + 0.5 * rng.Gaussian());
  }
  DataView view(flat, 2);
  FullGaussian fit = FullGaussian::Fit(view, false);
  CHECK(fit.mean()[0] == doctest::Approx(1.0).epsilon(0.1));
  CHECK(fit.mean()[1] == doctest::Approx(-2.0).epsilon(0.1));

  Matrix big(65, 65);
  for (int i = 0; i < 65; ++i) big(i, i) = 1.0;
  CHECK_THROWS_AS(FullGaussian(std::vector<double>(65, 0.0), big),
                  ValidationError);
}

namespace {

ModelBank SmallBank() {
  ModelBank bank;
  bank.basis = "WAVE_DCT";
  bank.frame_dim = 2;
  bank.classes = {"a", "b"};
  bank.sectors = {'C'};
  bank.frame_counts = {1};
  bank.component_counts = {1, 2};
  bank.component_weights = UniformWeights(2);
  bank.zero_mean = true;
  bank.config_hash = "beef";
  bank.seed = 4;
  uint64_t seed = 0;
  for (const auto &cls : bank.classes)
    for (int c : bank.component_counts)
      bank.Insert(cls, 'C', 1, c, RandomGmm(c, 2, seed++, true));
  return bank;
}

}  // namespace

TEST_CASE("model bank validation and lookup") {
  ModelBank bank = SmallBank();
  bank.Validate();
  CHECK_THROWS_AS(bank.Model("a", 'C', 1, 4), ConfigError);
  CHECK_THROWS_AS(bank.Model("z", 'C', 1, 1), ConfigError);

  ModelBank bad = SmallBank();
  bad.component_counts = {1, 3};  // 3 is outside the doubling family
  CHECK_THROWS_AS(bad.Validate(), ValidationError);

  ModelBank bad2 = SmallBank();
  bad2.component_weights = {0.9, 0.9};
  CHECK_THROWS_AS(bad2.Validate(), ValidationError);
}

TEST_CASE("model bank serialization round-trips bit-stably") {
  namespace fs = std::filesystem;
  ModelBank bank = SmallBank();
  bank.slice_weights[{"a", 'C', 1}] = {0.25, 0.75};
  std::string path1 = (fs::temp_directory_path() / "wc-bank1.mdl").string();
  std::string path2 = (fs::temp_directory_path() / "wc-bank2.mdl").string();
  SaveModelBank(bank, path1);
  ModelBank loaded = LoadModelBank(path1);
  SaveModelBank(loaded, path2);

  std::ifstream f1(path1), f2(path2);
  std::string s1((std::istreambuf_iterator<char>(f1)),
                 std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)),
                 std::istreambuf_iterator<char>());
  CHECK(s1 == s2);

  // Doubles survive exactly.
  const DiagGmm &orig = bank.Model("a", 'C', 1, 2);
  const DiagGmm &back = loaded.Model("a", 'C', 1, 2);
  for (int i = 0; i < orig.NumComponents(); ++i) {
    CHECK(orig.components()[i].weight == back.components()[i].weight);
    CHECK(orig.components()[i].var == back.components()[i].var);
  }
  CHECK(loaded.slice_weights == bank.slice_weights);
  fs::remove(path1);
  fs::remove(path2);
}
