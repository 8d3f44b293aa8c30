// eval/eval-test.cc

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

#include <filesystem>

#include "base/error.h"
#include "base/rng.h"
#include "corpus/synthetic.h"
#include "density/em.h"
#include "eval/experiment.h"
#include "eval/report.h"
#include "eval/scoring.h"

using namespace waveclass;

TEST_CASE("confusion matrix counts rows as truth") {
  std::vector<std::string> order = {"a", "b"};
  auto single = ConfusionMatrix({"a"}, {"a"}, order);
  CHECK(single[0] == 1);
  CHECK(single[1] == 0);

  auto off = ConfusionMatrix({"b", "b", "b"}, {"a", "a", "a"}, order);
  CHECK(off[0 * 2 + 1] == 3);

  CHECK(ConfusionMatrix({}, {}, order) == std::vector<int64_t>(4, 0));
  CHECK_THROWS_AS(ConfusionMatrix({"a"}, {}, order), ValidationError);
}

TEST_CASE("scoring folds to 39-level groups before comparing") {
  ClassMap map = ClassMap::FromPairs(
      {{"sh", "sh"}, {"zh", "zh"}, {"aa", "aa"}},
      {{"sh", "sh"}, {"zh", "sh"}, {"aa", "aa"}});

  EvaluationReport all = Score({"sh", "aa"}, {"sh", "aa"}, map);
  CHECK(all.error_rate == 0.0);

  // zh predicted for a sh truth counts as correct after folding.
  EvaluationReport folded = Score({"zh"}, {"sh"}, map);
  CHECK(folded.error_rate == 0.0);

  EvaluationReport wrong = Score({"aa"}, {"sh"}, map);
  CHECK(wrong.error_rate == 1.0);
  CHECK(wrong.TotalCount() == 1);

  // error_rate equals 1 - trace/total by construction.
  EvaluationReport mixed =
      Score({"sh", "aa", "zh", "aa"}, {"sh", "sh", "sh", "aa"}, map);
  int64_t trace = 0;
  for (size_t i = 0; i < mixed.class_order.size(); ++i)
    trace += mixed.ConfusionAt(static_cast<int>(i), static_cast<int>(i));
  CHECK(mixed.error_rate ==
        doctest::Approx(1.0 - static_cast<double>(trace) / mixed.TotalCount()));
}

TEST_CASE("report files are written and the JSON mirror reloads") {
  namespace fs = std::filesystem;
  ClassMap map = ClassMap::Identity({"a", "b"});
  EvaluationReport report = Score({"a", "b", "a"}, {"a", "b", "b"}, map);
  report.condition = "snr+06db";
  report.rule = "T";
  report.runtime_seconds = 1.25;
  report.config_hash = "feed";
  report.seed = 3;
  report.notes = "policy=adapt basis=WAVE_DCT";
  std::string stem = (fs::temp_directory_path() / "wc-report-T").string();
  WriteReportFiles(report, stem);
  CHECK(fs::exists(stem + ".report"));
  EvaluationReport back = LoadReportJson(stem + ".report.json");
  CHECK(back.error_rate == report.error_rate);
  CHECK(back.condition == report.condition);
  CHECK(back.confusion == report.confusion);
  CHECK(back.notes == report.notes);
  fs::remove(stem + ".report");
  fs::remove(stem + ".report.json");
}

namespace {

// Tiny end-to-end corpus for pipeline tests: 4 classes, short sentences.
ExperimentData TinyData(uint64_t seed) {
  SyntheticCorpusOptions options;
  options.classes = {DefaultSyntheticClasses()[0], DefaultSyntheticClasses()[2],
                     DefaultSyntheticClasses()[4], DefaultSyntheticClasses()[5]};
  options.train_sentences = 16;
  options.test_sentences = 6;
  options.phones_per_sentence = 8;
  options.seed = seed;
  SyntheticCorpus corpus = MakeSyntheticCorpus(options);

  ExperimentData data;
  data.class_map = corpus.class_map;
  data.train_manifest =
      ExtractInstances(corpus.train_labels, corpus.class_map, "train");
  data.test_manifest =
      ExtractInstances(corpus.test_labels, corpus.class_map, "test");
  data.train_waves = corpus.train_waves;
  data.test_waves = corpus.test_waves;
  data.noise = std::make_shared<WhiteNoiseSource>();
  return data;
}

PipelineConfig TinyConfig() {
  PipelineConfig config;
  config.basis = FeatureBasis::kWaveDct;
  config.sectors = {'C'};
  config.frame_counts = {3};
  config.component_counts = {1, 2};
  config.seed = 17;
  config.workers = 2;
  config.config_hash = "tiny";
  return config;
}

}  // namespace

TEST_CASE("sweep under ADAPT reuses the trained bank and calls no training") {
  Experiment experiment(TinyData(5), TinyConfig());
  ModelBank bank = experiment.TrainBank(SnrCondition::Quiet());
  bank.Validate();

  uint64_t trained = EmTrainInvocations();
  auto results = experiment.Sweep(
      {SnrCondition::Quiet(), SnrCondition::Db(0), SnrCondition::Db(-6)},
      AdaptationPolicy::kAdapt, ParseRule("T"), bank);
  CHECK(EmTrainInvocations() == trained);  // adaptation never retrains
  REQUIRE(results.size() == 3);
  for (const auto &r : results) {
    CHECK(r.report.TotalCount() ==
          static_cast<int64_t>(experiment.data().test_manifest.instances.size()));
    CHECK(r.report.error_rate >= 0.0);
    CHECK(r.report.error_rate <= 1.0);
    CHECK(r.dump.instance_ids.size() == r.dump.scores.size());
  }
  // Quiet adaptation with sigma2 = 0 must match the unadapted bank exactly.
  auto direct = experiment.Evaluate(bank, SnrCondition::Quiet(),
                                    AdaptationPolicy::kNone, ParseRule("T"));
  CHECK(direct.report.error_rate == results[0].report.error_rate);
  CHECK(direct.dump.scores == results[0].dump.scores);
}

TEST_CASE("evaluation is bit-reproducible and worker-count independent") {
  ExperimentData data = TinyData(6);
  PipelineConfig one = TinyConfig();
  one.workers = 1;
  PipelineConfig four = TinyConfig();
  four.workers = 4;

  Experiment a(data, one), b(data, four);
  ModelBank bank_a = a.TrainBank(SnrCondition::Quiet());
  ModelBank bank_b = b.TrainBank(SnrCondition::Quiet());
  auto ra = a.Evaluate(bank_a, SnrCondition::Db(6), AdaptationPolicy::kAdapt,
                       ParseRule("T"));
  auto rb = b.Evaluate(bank_b, SnrCondition::Db(6), AdaptationPolicy::kAdapt,
                       ParseRule("T"));
  CHECK(ra.report.error_rate == rb.report.error_rate);
  CHECK(ra.dump.scores == rb.dump.scores);  // bit-exact across worker counts
}

TEST_CASE("matched policy retrains per condition and needs training data") {
  Experiment experiment(TinyData(7), TinyConfig());
  ModelBank bank = experiment.TrainBank(SnrCondition::Quiet());
  uint64_t before = EmTrainInvocations();
  auto result = experiment.Evaluate(bank, SnrCondition::Db(0),
                                    AdaptationPolicy::kMatched, ParseRule("T"));
  CHECK(EmTrainInvocations() > before);
  CHECK(result.report.error_rate <= 1.0);

  ExperimentData no_train = TinyData(7);
  no_train.train_waves.clear();
  no_train.train_manifest.instances.clear();
  Experiment crippled(no_train, TinyConfig());
  CHECK_THROWS_AS(crippled.Evaluate(bank, SnrCondition::Db(0),
                                    AdaptationPolicy::kMatched, ParseRule("T")),
                  ConfigError);
}

TEST_CASE("multi-sector banks evaluate under every rule") {
  PipelineConfig config = TinyConfig();
  config.sectors = {'A', 'C', 'E'};
  config.frame_counts = {1, 3};
  Experiment experiment(TinyData(11), config);
  ModelBank bank = experiment.TrainBank(SnrCondition::Quiet());
  CHECK(bank.models.size() ==
        bank.classes.size() * 3 * 2 * bank.component_counts.size());

  std::map<std::string, double> errors;
  for (const char *rule : {"T", "R", "S:3", "M:3"}) {
    auto result = experiment.Evaluate(bank, SnrCondition::Quiet(),
                                      AdaptationPolicy::kNone, ParseRule(rule));
    errors[rule] = result.report.error_rate;
    CHECK(result.report.rule == ParseRule(rule).Name());
  }
  // All four rules produce valid reports on the same bank.
  for (const auto &[rule, err] : errors) {
    CHECK(err >= 0.0);
    CHECK(err <= 1.0);
  }
}

TEST_CASE("posterior slice weights train and score") {
  PipelineConfig config = TinyConfig();
  config.posterior_weights = true;
  Experiment experiment(TinyData(9), config);
  ModelBank bank = experiment.TrainBank(SnrCondition::Quiet());
  bank.Validate();
  CHECK(!bank.slice_weights.empty());
  for (const auto &[key, u] : bank.slice_weights) {
    double sum = 0.0;
    for (double v : u) {
      CHECK(v >= 0.0);  // dominated models may carry exactly zero weight
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
  auto result = experiment.Evaluate(bank, SnrCondition::Quiet(),
                                    AdaptationPolicy::kNone, ParseRule("T"));
  CHECK(result.report.error_rate <= 1.0);
}

TEST_CASE("file noise drives estimated-covariance adaptation") {
  ExperimentData data = TinyData(10);
  // Strongly high-passed noise: first difference of white samples.
  Rng rng(77);
  std::vector<double> colored(200000);
  double prev = rng.Gaussian();
  for (double &v : colored) {
    double cur = rng.Gaussian();
    v = cur - prev;
    prev = cur;
  }
  data.noise = std::make_shared<FileNoiseSource>(colored, "hp-test");

  Experiment experiment(data, TinyConfig());
  NoiseSpec spec = experiment.FrameNoiseSpec(1.0);
  CHECK(spec.noise_id == "hp-test");
  double total = 0.0, lo = 1e9, hi = 0.0;
  for (double v : spec.n_diag) {
    total += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(total == doctest::Approx(160.0).epsilon(1e-9));
  CHECK(hi / lo > 2.0);  // clearly colored, not flat
  // High-pass noise concentrates in the upper DCT coefficients.
  CHECK(spec.n_diag[159] > spec.n_diag[0]);

  ModelBank bank = experiment.TrainBank(SnrCondition::Quiet());
  auto result = experiment.Evaluate(bank, SnrCondition::Db(0),
                                    AdaptationPolicy::kAdapt, ParseRule("T"));
  CHECK(result.report.error_rate <= 1.0);

  // Re-adapting an adapted bank is refused.
  ModelBank adapted = AdaptBank(bank, spec);
  CHECK_THROWS_AS(AdaptBank(adapted, spec), ConfigError);
  CHECK_THROWS_AS(experiment.Evaluate(adapted, SnrCondition::Db(0),
                                      AdaptationPolicy::kAdapt, ParseRule("T")),
                  ConfigError);
}

TEST_CASE("policy/basis constraints are enforced") {
  Experiment wave(TinyData(8), TinyConfig());
  ModelBank bank = wave.TrainBank(SnrCondition::Quiet());
  CHECK_THROWS_AS(wave.Evaluate(bank, SnrCondition::Db(0),
                                AdaptationPolicy::kCmvn, ParseRule("T")),
                  ConfigError);

  PipelineConfig ceps = TinyConfig();
  ceps.basis = FeatureBasis::kMfcc;
  ceps.frame_counts = {3};
  Experiment mfcc(TinyData(8), ceps);
  ModelBank cep_bank = mfcc.TrainBank(SnrCondition::Quiet());
  CHECK_THROWS_AS(mfcc.Evaluate(cep_bank, SnrCondition::Db(0),
                                AdaptationPolicy::kAdapt, ParseRule("T")),
                  ConfigError);
  // CMVN is the cepstral compensation path.
  auto ok = mfcc.Evaluate(cep_bank, SnrCondition::Db(0),
                          AdaptationPolicy::kCmvn, ParseRule("T"));
  CHECK(ok.report.error_rate <= 1.0);
}

TEST_CASE("chance level emerges from uninformative models") {
  // 48 synthetic groups, identical models for every class, priors with a
  // 0.065 maximum: the classifier always picks the max-prior class and the
  // error equals 1 - 0.065.
  const int num_classes = 48;
  std::vector<std::string> names;
  for (int k = 0; k < num_classes; ++k) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "k%02d", k);
    names.push_back(buf);
  }
  // Fold nine pairs among the tail classes so the 39-group invariant holds.
  std::vector<std::pair<std::string, std::string>> fold48, fold39;
  for (const auto &n : names) fold48.push_back({n, n});
  for (int k = 0; k < num_classes; ++k) {
    std::string to = names[k];
    if (k >= 30 && k < 48 && k % 2 == 1) to = names[k - 1];
    fold39.push_back({names[k], to});
  }
  ClassMap map = ClassMap::FromPairs(fold48, fold39);
  REQUIRE(map.Groups39().size() == 39);

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

  // Priors: one class at 0.065, the others uniform on the rest.
  std::map<std::string, double> priors;
  priors[names[0]] = 0.065;
  for (int k = 1; k < num_classes; ++k)
    priors[names[k]] = 0.935 / (num_classes - 1);
  std::vector<double> aligned = AlignedPriors(priors, bank.classes);

  // Deterministic truth allocation proportional to the priors.
  const int n = 10000;
  std::vector<std::string> truths, predictions;
  Rng rng(4);
  FeatureMatrix features;
  features.basis = FeatureBasis::kWaveDct;
  features.num_frames = 3;
  features.dim = 4;
  features.hop_seconds = 0.01;
  features.width_seconds = 0.01;
  features.data.resize(12);
  int assigned = 0;
  for (int k = 0; k < num_classes; ++k) {
    int count = k + 1 < num_classes
                    ? static_cast<int>(std::lround(priors[names[k]] * n))
                    : n - assigned;
    for (int i = 0; i < count; ++i) truths.push_back(names[k]);
    assigned += count;
  }
  REQUIRE(static_cast<int>(truths.size()) == n);
  for (int i = 0; i < n; ++i) {
    for (double &v : features.data) v = rng.Gaussian();
    PhonemeInstance inst;
    inst.sentence_id = "s";
    inst.interval = {"x", 160, 320};
    inst.center = 240;
    InstanceAssemblies assemblies =
        BuildAssemblies(features, inst, bank.sectors, bank.frame_counts);
    std::vector<double> scores = ScoreInstance(bank, assemblies, ParseRule("T"));
    predictions.push_back(Predict(scores, aligned, bank.classes).class_id);
  }
  EvaluationReport report = Score(predictions, truths, map);
  CHECK(report.error_rate == doctest::Approx(0.935).epsilon(0.006));
}
