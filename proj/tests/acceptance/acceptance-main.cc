// tests/acceptance/acceptance-main.cc

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

// End-to-end verification harness.  Each check prints one line:
//   [PASS] name: detail
//   [FAIL] name: detail
//   [SKIP] name: reason
// and the process exits nonzero when anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "adapt/adapt.h"
#include "base/rng.h"
#include "classifier/alpha-fit.h"
#include "classifier/combine.h"
#include "classifier/rules.h"
#include "corpus/synthetic.h"
#include "density/em.h"
#include "density/model-average.h"
#include "eval/experiment.h"
#include "frontend/dct.h"
#include "oracles.h"
#include "timit-track.h"

using namespace waveclass;

namespace {

struct CheckFailure {
  std::string message;
};

void Require(bool ok, const std::string &message) {
  if (!ok) throw CheckFailure{message};
}

std::string Fmt(const char *format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

// ---------------------------------------------------------------------------
// Synthetic zero-mean diagonal GMM classes for the adaptation criteria.

struct GmmTask {
  std::vector<DiagGmm> generators;     // true class densities
  std::vector<std::string> classes;
};

GmmTask MakeGmmTask(int num_classes, int d, int components, uint64_t seed) {
  GmmTask task;
  for (int k = 0; k < num_classes; ++k) {
    std::vector<DiagGaussianComponent> comps(components);
    Rng rng(DeriveSeed(seed, "gen/" + std::to_string(k)));
    double center = d * (k + 0.5) / num_classes;
    for (int i = 0; i < components; ++i) {
      comps[i].weight = 1.0 / components;
      comps[i].mean.assign(d, 0.0);
      comps[i].var.resize(d);
      double gain = std::pow(2.0, i - components / 2.0 + 0.5);
      double width = 5.0 + 2.0 * rng.Uniform();
      double shift = 2.0 * i + rng.Uniform();
      double total = 0.0;
      for (int j = 0; j < d; ++j) {
        double z = (j - center - shift) / width;
        comps[i].var[j] = 0.05 + gain * std::exp(-0.5 * z * z);
        total += comps[i].var[j];
      }
      // Unit average power per component, matching normalized speech.
      for (double &v : comps[i].var) v *= d / total;
    }
    task.generators.emplace_back(std::move(comps), "WAVE_DCT", true);
    task.classes.push_back("g" + std::to_string(k));
  }
  return task;
}

std::vector<double> SampleClass(const DiagGmm &gen, int n, uint64_t seed) {
  Rng rng(seed);
  const int d = gen.Dim();
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(n) * d);
  for (int i = 0; i < n; ++i) {
    double pick = rng.Uniform();
    double acc = 0.0;
    const DiagGaussianComponent *chosen = &gen.components().back();
    for (const auto &comp : gen.components()) {
      acc += comp.weight;
      if (pick < acc) {
        chosen = &comp;
        break;
      }
    }
    for (int j = 0; j < d; ++j)
      flat.push_back(std::sqrt(chosen->var[j]) * rng.Gaussian());
  }
  return flat;
}

// y = (x + sigma n) / sqrt(1 + sigma2): noisy samples under the normalized
// additive-noise model.
std::vector<double> MixGmmSamples(const std::vector<double> &x, double sigma2,
                                  uint64_t seed) {
  Rng rng(seed);
  double sigma = std::sqrt(sigma2);
  double scale = 1.0 / std::sqrt(1.0 + sigma2);
  std::vector<double> out(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out[i] = (x[i] + sigma * rng.Gaussian()) * scale;
  return out;
}

double GmmClassifierError(const std::vector<DiagGmm> &models,
                          const std::vector<std::vector<double>> &test_flat,
                          int d) {
  int64_t wrong = 0, total = 0;
  for (size_t truth = 0; truth < models.size(); ++truth) {
    DataView view(test_flat[truth], d);
    for (int64_t i = 0; i < view.n; ++i) {
      auto x = view.Row(i);
      int best = 0;
      double best_ll = models[0].LogLikelihood(x);
      for (size_t k = 1; k < models.size(); ++k) {
        double ll = models[k].LogLikelihood(x);
        if (ll > best_ll) {
          best_ll = ll;
          best = static_cast<int>(k);
        }
      }
      wrong += best != static_cast<int>(truth);
      ++total;
    }
  }
  return static_cast<double>(wrong) / static_cast<double>(total);
}

// ---------------------------------------------------------------------------
// Criterion: quiet-trained + adapted vs matched-retrained classification.

void AdaptationOracleEquivalence() {
  auto start = std::chrono::steady_clock::now();
  const int num_classes = 6, d = 64, components = 4;
  const int n_train = 2000, n_test = 2000;
  GmmTask task = MakeGmmTask(num_classes, d, components, 101);

  std::vector<std::vector<double>> train(num_classes), test(num_classes);
  for (int k = 0; k < num_classes; ++k) {
    train[k] = SampleClass(task.generators[k], n_train,
                           DeriveSeed(202, "train" + std::to_string(k)));
    test[k] = SampleClass(task.generators[k], n_test,
                          DeriveSeed(202, "test" + std::to_string(k)));
  }

  std::vector<DiagGmm> quiet_models;
  for (int k = 0; k < num_classes; ++k)
    quiet_models.push_back(EmTrain(DataView(train[k], d), components, true,
                                   DeriveSeed(303, std::to_string(k)),
                                   "WAVE_DCT"));

  std::ostringstream detail;
  for (double snr_db : {12.0, 6.0, 0.0}) {
    double sigma2 = std::pow(10.0, -snr_db / 10.0);

    std::vector<std::vector<double>> noisy_test(num_classes);
    std::vector<std::vector<double>> noisy_train(num_classes);
    for (int k = 0; k < num_classes; ++k) {
      noisy_test[k] = MixGmmSamples(
          test[k], sigma2,
          DeriveSeed(404, "t" + std::to_string(k) + "/" + std::to_string(snr_db)));
      noisy_train[k] = MixGmmSamples(
          train[k], sigma2,
          DeriveSeed(404, "r" + std::to_string(k) + "/" + std::to_string(snr_db)));
    }

    NoiseSpec noise = WhiteNoiseSpec(d, sigma2, "WAVE_DCT");
    std::vector<DiagGmm> adapted;
    for (const DiagGmm &m : quiet_models) adapted.push_back(AdaptModel(m, noise));
    double err_adapted = GmmClassifierError(adapted, noisy_test, d);

    std::vector<DiagGmm> matched;
    for (int k = 0; k < num_classes; ++k)
      matched.push_back(EmTrain(DataView(noisy_train[k], d), components, true,
                                DeriveSeed(505, std::to_string(k) + "/" +
                                                    std::to_string(snr_db)),
                                "WAVE_DCT"));
    double err_matched = GmmClassifierError(matched, noisy_test, d);

    double gap = std::abs(err_adapted - err_matched);
    detail << Fmt("[%+.0fdB adapted %.3f matched %.3f] ", snr_db, err_adapted,
                  err_matched);
    Require(gap <= 0.015,
            Fmt("gap %.4f above 0.015 at %+.0f dB", gap, snr_db));
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  Require(seconds < 300.0, Fmt("runtime %.1fs exceeds 300s", seconds));
  std::cout << detail.str() << Fmt("runtime %.1fs", seconds);
}

// ---------------------------------------------------------------------------
// Criterion: the adapted density equals the closed-form noisy density.

void AdaptedDensityExactness() {
  const int d = 16;
  Rng rng(7);
  DiagGaussianComponent comp;
  comp.weight = 1.0;
  comp.mean.assign(d, 0.0);
  comp.var.resize(d);
  for (double &v : comp.var) v = 0.2 + 2.0 * rng.Uniform();
  DiagGmm quiet({comp}, "WAVE_DCT", true);

  const double sigma2 = 0.5;
  DiagGmm adapted = AdaptModel(quiet, WhiteNoiseSpec(d, sigma2, "WAVE_DCT"));

  // Closed form: y = (x + n)/sqrt(1+sigma2) is zero-mean Gaussian with
  // variances (var_j + sigma2) / (1 + sigma2), evaluated independently.
  std::vector<double> closed_var(d);
  for (int j = 0; j < d; ++j)
    closed_var[j] = (comp.var[j] + sigma2) / (1.0 + sigma2);

  std::vector<double> x_flat =
      SampleClass(quiet, 1000, DeriveSeed(1, "exact"));
  std::vector<double> y_flat = MixGmmSamples(x_flat, sigma2, 99);
  DataView view(y_flat, d);
  double max_gap = 0.0;
  for (int64_t i = 0; i < view.n; ++i) {
    auto y = view.Row(i);
    double got = adapted.LogLikelihood(y);
    long double want = oracle::DiagGaussianLogDensity(
        comp.mean, closed_var, y);
    max_gap = std::max(max_gap, std::abs(got - static_cast<double>(want)));
  }
  Require(max_gap < 1e-9, Fmt("max per-point gap %.2e above 1e-9", max_gap));
  std::cout << Fmt("max per-point gap %.2e over 1000 points", max_gap);
}

// ---------------------------------------------------------------------------
// Criterion: EM behavior.

void EmSuite() {
  // Monotone likelihood on 50 random instances.
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 1 + static_cast<int>(rng.UniformInt(5));
    int c = 1 + static_cast<int>(rng.UniformInt(4));
    int n = 10 * c + static_cast<int>(rng.UniformInt(200));
    bool zero_mean = rng.Uniform() < 0.5;
    std::vector<double> flat;
    double spread = 0.5 + 3.0 * rng.Uniform();
    for (int i = 0; i < n * d; ++i)
      flat.push_back(spread * rng.Gaussian() +
                     (i % 3 == 0 ? rng.Gaussian() : 0.0));
    EmLog log;
    EmTrain(DataView(flat, d), c, zero_mean, 1000 + trial, "WAVE_DCT", {},
            &log);
    Require(log.reseed_iterations.empty(), "unexpected component reseed");
    for (size_t t = 1; t < log.avg_loglik.size(); ++t)
      Require(log.avg_loglik[t] >=
                  log.avg_loglik[t - 1] -
                      1e-8 * std::max(1.0, std::abs(log.avg_loglik[t - 1])),
              Fmt("likelihood decreased at iteration %.0f of trial %.0f",
                  static_cast<double>(t), static_cast<double>(trial)));
  }

  // Closed-form single component, free mean.
  {
    Rng data_rng(66);
    std::vector<double> flat;
    const int n = 400, d = 3;
    for (int i = 0; i < n * d; ++i)
      flat.push_back(1.3 + 2.5 * data_rng.Gaussian());
    DataView data(flat, d);
    DiagGmm model = EmTrain(data, 1, false, 1, "MFCC");
    for (int j = 0; j < d; ++j) {
      double mean = 0.0;
      for (int64_t i = 0; i < data.n; ++i) mean += data.Row(i)[j];
      mean /= n;
      double var = 0.0;
      for (int64_t i = 0; i < data.n; ++i) {
        double diff = data.Row(i)[j] - mean;
        var += diff * diff;
      }
      var /= n;
      Require(std::abs(model.components()[0].mean[j] - mean) <=
                  1e-12 * std::max(1.0, std::abs(mean)),
              "closed-form mean mismatch");
      Require(std::abs(model.components()[0].var[j] - var) <= 1e-12 * var,
              "closed-form variance mismatch");
    }
  }

  // Two-component variance recovery: half N(0,1), half N(0,100).
  {
    Rng data_rng(77);
    std::vector<double> flat;
    const int n = 10000;
    for (int i = 0; i < n / 2; ++i) flat.push_back(data_rng.Gaussian());
    for (int i = 0; i < n / 2; ++i) flat.push_back(10.0 * data_rng.Gaussian());
    DiagGmm model = EmTrain(DataView(flat, 1), 2, true, 5, "WAVE_DCT");
    double v0 = model.components()[0].var[0];
    double v1 = model.components()[1].var[0];
    double lo = std::min(v0, v1), hi = std::max(v0, v1);
    Require(std::abs(lo - 1.0) <= 0.1, Fmt("low variance %.3f not near 1", lo));
    Require(std::abs(hi - 100.0) <= 10.0,
            Fmt("high variance %.2f not near 100", hi));
    for (const auto &comp : model.components())
      Require(std::abs(comp.weight - 0.5) <= 0.05,
              Fmt("weight %.3f not within 0.05 of 0.5", comp.weight));
    std::cout << Fmt("recovered variances {%.2f, %.2f}", lo, hi);
  }
}

// ---------------------------------------------------------------------------
// Criterion: DCT orthonormality, Parseval and the white-noise estimate.

void DctSuite() {
  const int n = 160;
  auto dct = DctMatrix::Get(n);
  std::vector<std::vector<double>> cols(n, std::vector<double>(n));
  std::vector<double> e(n, 0.0), y(n);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    dct->Forward(e, y);
    e[j] = 0.0;
    cols[j] = y;
  }
  double ortho_dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double dot = 0.0;
      for (int k = 0; k < n; ++k) dot += cols[i][k] * cols[j][k];
      ortho_dev = std::max(ortho_dev, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  Require(ortho_dev < 1e-10, Fmt("orthonormality deviation %.2e", ortho_dev));

  Rng rng(3);
  double parseval_dev = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> block(n), coef(n);
    for (double &v : block) v = rng.Gaussian();
    dct->Forward(block, coef);
    double ein = 0.0, eout = 0.0;
    for (int j = 0; j < n; ++j) {
      ein += block[j] * block[j];
      eout += coef[j] * coef[j];
    }
    parseval_dev = std::max(parseval_dev, std::abs(ein - eout));
  }
  Require(parseval_dev < 1e-9, Fmt("Parseval deviation %.2e", parseval_dev));

  WhiteNoiseSource noise;
  std::vector<double> samples = noise.Sample(1000000, 909);
  std::vector<double> diag = EstimateNoiseCovDiag(samples, n);
  double max_dev = 0.0;
  for (double v : diag) max_dev = std::max(max_dev, std::abs(v - 1.0));
  Require(max_dev < 0.05, Fmt("white-noise estimate deviation %.3f", max_dev));
  std::cout << Fmt("ortho %.1e, parseval %.1e, noise-diag %.3f", ortho_dev,
                   parseval_dev, max_dev);
}

// ---------------------------------------------------------------------------
// Criterion: reduction chain.

void ReductionChain() {
  // |C| = 1: the model average is the plain log-likelihood, exactly.
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    double ll = 100.0 * rng.Gaussian();
    std::vector<double> one = {ll};
    std::vector<double> u = {1.0};
    Require(CombineModelLogLiks(one, u) == ll, "M != L for a singleton set");
  }

  // |F| = 1 and one sector: the combined rule equals the plain rule.
  const int d = 5;
  std::vector<std::string> classes = {"a", "b", "c"};
  ModelBank bank;
  bank.basis = "WAVE_DCT";
  bank.frame_dim = d;
  bank.classes = classes;
  bank.sectors = {'C'};
  bank.frame_counts = {1};
  bank.component_counts = {1};
  bank.component_weights = {1.0};
  bank.zero_mean = true;
  for (size_t k = 0; k < classes.size(); ++k) {
    DiagGaussianComponent comp;
    comp.weight = 1.0;
    comp.mean.assign(d, 0.0);
    comp.var.resize(d);
    Rng vr(40 + k);
    for (double &v : comp.var) v = 0.3 + vr.Uniform();
    bank.Insert(classes[k], 'C', 1, 1, DiagGmm({comp}, "WAVE_DCT", true));
  }
  std::vector<double> priors = {0.5, 0.3, 0.2};

  FeatureMatrix features;
  features.basis = FeatureBasis::kWaveDct;
  features.num_frames = 20;
  features.dim = d;
  features.hop_seconds = 0.01;
  features.width_seconds = 0.01;
  features.rate = 16000.0;
  features.data.resize(100);

  for (int trial = 0; trial < 200; ++trial) {
    for (double &v : features.data) v = rng.Gaussian();
    PhonemeInstance inst;
    inst.sentence_id = "s";
    inst.interval = {"a", 480, 2080};
    inst.center = 1280;
    InstanceAssemblies assemblies =
        BuildAssemblies(features, inst, bank.sectors, bank.frame_counts);
    std::vector<double> t_scores = ScoreInstance(bank, assemblies, ParseRule("T"));
    Prediction via_t = Predict(t_scores, priors, classes);

    std::vector<double> plain(classes.size());
    for (size_t k = 0; k < classes.size(); ++k)
      plain[k] =
          bank.Model(classes[k], 'C', 1, 1).LogLikelihood(assemblies.vectors[0][0]);
    Prediction via_l = Predict(plain, priors, classes);
    Require(via_t.class_index == via_l.class_index,
            "A^T differs from A^L in the reduced configuration");
    Require(t_scores == plain, "T scores differ from L in the reduced chain");
  }

  // alpha = 0 / alpha = 1 endpoints on 1000 random score tables.
  std::vector<double> uniform(7, 1.0 / 7);
  std::vector<std::string> names;
  for (int k = 0; k < 7; ++k) names.push_back("c" + std::to_string(k));
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> cep(7), wave(7);
    for (int k = 0; k < 7; ++k) {
      cep[k] = 300.0 * rng.Gaussian();
      wave[k] = 300.0 * rng.Gaussian();
    }
    Prediction cep_only = Predict(cep, uniform, names);
    Prediction wave_only = Predict(wave, uniform, names);
    Prediction at0 = Predict(CombineLogLiks(cep, wave, 0.0), uniform, names);
    Prediction at1 = Predict(CombineLogLiks(cep, wave, 1.0), uniform, names);
    Require(at0.class_index == cep_only.class_index, "alpha=0 endpoint broken");
    Require(at1.class_index == wave_only.class_index, "alpha=1 endpoint broken");
  }
  std::cout << "singleton M=L, A^T=A^L on 200 draws, 1000 endpoint tables";
}

// ---------------------------------------------------------------------------
// Criterion: chance level under uninformative features.

void ChanceLevel() {
  const int num_classes = 48;
  std::vector<std::string> names;
  for (int k = 0; k < num_classes; ++k) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "k%02d", k);
    names.push_back(buf);
  }
  std::vector<std::pair<std::string, std::string>> fold48, fold39;
  for (const auto &n : names) fold48.push_back({n, n});
  for (int k = 0; k < num_classes; ++k) {
    std::string to = names[k];
    if (k >= 30 && k % 2 == 1) to = names[k - 1];
    fold39.push_back({names[k], to});
  }
  ClassMap map = ClassMap::FromPairs(fold48, fold39);
  Require(map.Groups39().size() == 39, "synthetic folding is not 39 groups");

  ModelBank bank;
  bank.basis = "WAVE_DCT";
  bank.frame_dim = 4;
  bank.classes = names;
  bank.sectors = {'C'};
  bank.frame_counts = {1};
  bank.component_counts = {1};
  bank.component_weights = {1.0};
  bank.zero_mean = true;
  DiagGaussianComponent comp;
  comp.weight = 1.0;
  comp.mean.assign(4, 0.0);
  comp.var.assign(4, 1.0);
  DiagGmm shared({comp}, "WAVE_DCT", true);
  for (const auto &n : names) bank.Insert(n, 'C', 1, 1, shared);

  std::map<std::string, double> priors;
  priors[names[0]] = 0.065;
  for (int k = 1; k < num_classes; ++k)
    priors[names[k]] = 0.935 / (num_classes - 1);
  std::vector<double> aligned = AlignedPriors(priors, bank.classes);

  const int n = 10000;
  std::vector<std::string> truths, predictions;
  int assigned = 0;
  for (int k = 0; k < num_classes; ++k) {
    int count = k + 1 < num_classes
                    ? static_cast<int>(std::lround(priors[names[k]] * n))
                    : n - assigned;
    for (int i = 0; i < count; ++i) truths.push_back(names[k]);
    assigned += count;
  }

  Rng rng(31);
  FeatureMatrix features;
  features.basis = FeatureBasis::kWaveDct;
  features.num_frames = 3;
  features.dim = 4;
  features.hop_seconds = 0.01;
  features.width_seconds = 0.01;
  features.rate = 16000.0;
  features.data.resize(12);
  PhonemeInstance inst;
  inst.sentence_id = "s";
  inst.interval = {"x", 160, 320};
  inst.center = 240;
  for (int i = 0; i < n; ++i) {
    for (double &v : features.data) v = rng.Gaussian();
    InstanceAssemblies assemblies =
        BuildAssemblies(features, inst, bank.sectors, bank.frame_counts);
    std::vector<double> scores = ScoreInstance(bank, assemblies, ParseRule("T"));
    predictions.push_back(Predict(scores, aligned, bank.classes).class_id);
  }
  EvaluationReport report = Score(predictions, truths, map);
  Require(std::abs(report.error_rate - 0.935) <= 0.005,
          Fmt("chance-level error %.4f not within 0.935 +- 0.005",
              report.error_rate));
  std::cout << Fmt("error %.4f on %.0f uninformative instances",
                   report.error_rate, static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Shared two-stream synthetic experiment for the schedule and crossover
// criteria.

struct TwoStreamResults {
  std::vector<SnrCondition> grid;
  std::vector<ScoreDump> cep_dumps, wave_dumps;
  std::map<std::string, double> cep_errors, wave_errors;  // per condition name
  std::map<std::string, double> priors;
  ClassMap map;
};

TwoStreamResults RunTwoStreamTask() {
  SyntheticCorpusOptions options;
  options.train_sentences = 30;
  options.test_sentences = 15;
  options.phones_per_sentence = 10;
  options.seed = 4242;
  SyntheticCorpus corpus = MakeSyntheticCorpus(options);

  ExperimentData base;
  base.class_map = corpus.class_map;
  base.train_manifest =
      ExtractInstances(corpus.train_labels, corpus.class_map, "train");
  base.train_manifest = AugmentSmallClasses(base.train_manifest, 60,
                                            {-80, -40, 40, 80});
  base.test_manifest =
      ExtractInstances(corpus.test_labels, corpus.class_map, "test");
  base.train_waves = corpus.train_waves;
  base.test_waves = corpus.test_waves;
  base.noise = std::make_shared<WhiteNoiseSource>();

  TwoStreamResults results;
  results.map = corpus.class_map;
  results.priors = base.train_manifest.priors;
  for (double db : {30.0, 24.0, 18.0, 12.0, 6.0, 0.0, -6.0, -12.0, -18.0})
    results.grid.push_back(SnrCondition::Db(db));
  results.grid.push_back(SnrCondition::Quiet());

  PipelineConfig wave_config;
  wave_config.basis = FeatureBasis::kWaveDct;
  wave_config.sectors = {'C'};
  wave_config.frame_counts = {5, 7, 9};
  wave_config.component_counts = {1, 2, 4};
  wave_config.seed = 7001;
  wave_config.workers = 1;
  wave_config.config_hash = "acceptance-wave";

  PipelineConfig cep_config = wave_config;
  cep_config.basis = FeatureBasis::kMfccDeltas;
  cep_config.frame_counts = {3, 5, 7};
  cep_config.cmvn = CmvnMode::kTrainset;
  cep_config.config_hash = "acceptance-cep";

  Experiment wave(base, wave_config);
  Experiment ceps(base, cep_config);
  ModelBank wave_bank = wave.TrainBank(SnrCondition::Quiet());
  ModelBank cep_bank = ceps.TrainBank(SnrCondition::Quiet());

  Rule rule = ParseRule("T");
  for (const SnrCondition &condition : results.grid) {
    auto wres =
        wave.Evaluate(wave_bank, condition, AdaptationPolicy::kAdapt, rule);
    auto cres =
        ceps.Evaluate(cep_bank, condition, AdaptationPolicy::kCmvn, rule);
    results.wave_errors[condition.Name()] = wres.report.error_rate;
    results.cep_errors[condition.Name()] = cres.report.error_rate;
    results.wave_dumps.push_back(std::move(wres.dump));
    results.cep_dumps.push_back(std::move(cres.dump));
  }
  return results;
}

TwoStreamResults &SharedTwoStream() {
  static TwoStreamResults results = RunTwoStreamTask();
  return results;
}

// ---------------------------------------------------------------------------
// Criterion: sigmoid schedule midpoint and the 2%-of-best band rule.

void ScheduleCheck() {
  CombinationSchedule reference{11.0, 0.3, AlphaUnits::kDb};
  Require(AlphaAt(reference, 11.0) == 0.5, "alpha(midpoint) != 0.5 exactly");

  TwoStreamResults &task = SharedTwoStream();
  AlphaFitOptions options;
  options.units = AlphaUnits::kDb;
  AlphaFitResult fit = FitAlphaSchedule(task.cep_dumps, task.wave_dumps,
                                        task.priors, task.map, options);
  Require(AlphaAt(fit.schedule, fit.schedule.midpoint) == 0.5,
          "fitted schedule midpoint violates alpha = 0.5");

  std::ostringstream detail;
  detail << Fmt("midpoint %.1f beta %.2f; ", fit.schedule.midpoint,
                fit.schedule.beta);
  for (const AlphaBand &band : fit.bands) {
    std::ostringstream msg;
    msg << "fitted alpha misses the 2%-of-best rule at "
        << band.condition.Name()
        << Fmt(" (%.4f vs best %.4f)", band.fitted_error, band.best_error);
    Require(band.fitted_error <= band.best_error + 0.02 + 1e-12, msg.str());
  }
  detail << "2%-of-best satisfied at all " << fit.bands.size()
         << " grid conditions";
  std::cout << detail.str();
}

// ---------------------------------------------------------------------------
// Criterion: directional crossover between the streams.

void DirectionalCrossover() {
  TwoStreamResults &task = SharedTwoStream();
  double wave_0db = task.wave_errors.at("snr+00db");
  double cep_0db = task.cep_errors.at("snr+00db");
  double wave_quiet = task.wave_errors.at("quiet");
  double cep_quiet = task.cep_errors.at("quiet");

  std::cout << Fmt("0dB wave %.3f vs cep %.3f; ", wave_0db, cep_0db)
            << Fmt("quiet cep %.3f vs wave %.3f ", cep_quiet, wave_quiet);
  Require(wave_0db < cep_0db,
          Fmt("adapted waveform (%.3f) not better than CMVN cepstra (%.3f) "
              "at 0 dB",
              wave_0db, cep_0db));
  Require(cep_quiet < wave_quiet,
          Fmt("CMVN cepstra (%.3f) not better than waveform (%.3f) in quiet",
              cep_quiet, wave_quiet));
}

// ---------------------------------------------------------------------------
// Conditional TIMIT reproduction track.

void TimitTrack() {
  const char *env = std::getenv("WAVECLASS_DATA_DIR");
  std::string data_dir =
      env && *env ? env : std::string(WAVECLASS_SOURCE_DIR) + "/data";
  std::cout << RunTimitTrack(data_dir);
}

struct CriterionEntry {
  const char *name;
  std::function<void()> run;
  bool skippable;
};

}  // namespace

int main() {
  std::vector<CriterionEntry> criteria = {
      {"adaptation-oracle-equivalence", AdaptationOracleEquivalence, false},
      {"adapted-density-exactness", AdaptedDensityExactness, false},
      {"em-suite", EmSuite, false},
      {"dct-suite", DctSuite, false},
      {"reduction-chain", ReductionChain, false},
      {"chance-level", ChanceLevel, false},
      {"schedule-check", ScheduleCheck, false},
      {"directional-crossover", DirectionalCrossover, false},
      {"timit-track", TimitTrack, true},
  };

  int failures = 0;
  for (const auto &criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::cout << "[....] " << criterion.name << std::flush;
    std::ostringstream captured;
    std::streambuf *old = std::cout.rdbuf(captured.rdbuf());
    std::string verdict, detail;
    try {
      criterion.run();
      verdict = "PASS";
    } catch (const CheckFailure &failure) {
      verdict = "FAIL";
      detail = failure.message;
      ++failures;
    } catch (const std::string &skip_reason) {
      verdict = criterion.skippable ? "SKIP" : "FAIL";
      detail = skip_reason;
      if (verdict == "FAIL") ++failures;
    } catch (const std::exception &e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    std::cout.rdbuf(old);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::string info = captured.str();
    if (!detail.empty()) info = info.empty() ? detail : info + "; " + detail;
    std::printf("\r[%s] %s: %s (%.1fs)\n", verdict.c_str(), criterion.name,
                info.c_str(), seconds);
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
