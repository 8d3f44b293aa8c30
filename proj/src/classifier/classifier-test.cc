// classifier/classifier-test.cc

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

#include "base/error.h"
#include "base/rng.h"
#include "classifier/alpha-fit.h"
#include "classifier/anchors.h"
#include "classifier/assembly.h"
#include "classifier/combine.h"
#include "classifier/rules.h"
#include "classifier/score-dump.h"
#include "density/model-average.h"

using namespace waveclass;

TEST_CASE("anchor points land on the documented fractions") {
  PhonemeInterval iv{"x", 0, 1200};
  auto anchors = AnchorPoints(iv);
  CHECK(anchors[0] == 0);
  CHECK(anchors[1] == 200);
  CHECK(anchors[2] == 600);
  CHECK(anchors[3] == 1000);
  CHECK(anchors[4] == 1200);

  PhonemeInterval iv2{"x", 160, 760};
  CHECK(AnchorForSector(iv2, 'C') == 460);
  CHECK(AnchorForSector(iv2, 'A') == 160);
  CHECK(AnchorForSector(iv2, 'E') == 760);

  CHECK_THROWS_AS(AnchorPoints(PhonemeInterval{"x", 5, 5}), ValidationError);
  CHECK_THROWS_AS(AnchorForSector(iv, 'Z'), ValidationError);
}

namespace {

FeatureMatrix RampFeatures(FeatureBasis basis, int num_frames, int dim,
                           double hop_s, double width_s) {
  FeatureMatrix m;
  m.basis = basis;
  m.num_frames = num_frames;
  m.dim = dim;
  m.hop_seconds = hop_s;
  m.width_seconds = width_s;
  m.rate = 16000.0;
  m.data.resize(static_cast<size_t>(num_frames) * dim);
  for (int t = 0; t < num_frames; ++t)
    for (int j = 0; j < dim; ++j)
      m.data[static_cast<size_t>(t) * dim + j] = t + 0.001 * j;
  return m;
}

}  // namespace

TEST_CASE("assembly picks the nearest frames and concatenates in order") {
  FeatureMatrix wave = RampFeatures(FeatureBasis::kWaveDct, 40, 160, 0.01, 0.01);
  // Frame centers at 80, 240, ...; anchor 2005 is nearest frame 12 (center 2000).
  std::vector<double> v = AssembleFrames(wave, 2005.0, 7);
  CHECK(v.size() == 7u * 160u);  // 1120-dimensional at f=7
  CHECK(v[0] == doctest::Approx(9.0));           // frames 9..15
  CHECK(v[6 * 160] == doctest::Approx(15.0));

  FeatureMatrix ceps =
      RampFeatures(FeatureBasis::kMfccDeltas, 40, 39, 0.01, 0.025);
  CHECK(AssembleFrames(ceps, 2000.0, 5).size() == 195u);

  // f=1 takes the single nearest frame.
  std::vector<double> one = AssembleFrames(wave, 245.0, 1);
  CHECK(one.size() == 160u);
  CHECK(one[0] == doctest::Approx(1.0));

  // Exact tie between centers 80 and 240 at anchor 160: earlier frame wins.
  CHECK(NearestFrameIndex(wave, 160.0) == 0);

  CHECK_THROWS_AS(AssembleFrames(wave, 100.0, 0), ValidationError);
}

TEST_CASE("assembly pads by basis: zeros in linear, replication in cepstral") {
  // Anchor 0 ties between the centers -80 and 80; the earlier frame (-1)
  // wins, so the f=5 window covers frames -3..1.
  FeatureMatrix wave = RampFeatures(FeatureBasis::kWaveDct, 5, 2, 0.01, 0.01);
  std::vector<double> v = AssembleFrames(wave, 0.0, 5);
  CHECK(v[0] == 0.0);  // zero-padded
  CHECK(v[1] == 0.0);
  CHECK(v[2 * 2] == 0.0);                    // frame -1: still padding
  CHECK(v[3 * 2] == doctest::Approx(0.0));   // frame 0 value = 0 + 0.001*j
  CHECK(v[3 * 2 + 1] == doctest::Approx(0.001));
  CHECK(v[4 * 2] == doctest::Approx(1.0));   // frame 1

  // Cepstral framing (width 25 ms) puts the first center at 200, so anchor 0
  // maps to frame -1 and the window covers frames -3..1, clamped.
  FeatureMatrix ceps = RampFeatures(FeatureBasis::kMfcc, 5, 2, 0.01, 0.025);
  std::vector<double> w = AssembleFrames(ceps, 0.0, 5);
  CHECK(w[0] == doctest::Approx(0.0));  // replicated frame 0
  CHECK(w[2 * 2] == doctest::Approx(0.0));
  CHECK(w[4 * 2] == doctest::Approx(1.0));
}

TEST_CASE("rule parsing and the sum helpers") {
  CHECK(ParseRule("T").kind == RuleKind::kCombined);
  CHECK(ParseRule("R").kind == RuleKind::kFAverage);
  CHECK(ParseRule("M:9").f == 9);
  CHECK(ParseRule("S:7").kind == RuleKind::kSectorSum);
  CHECK_THROWS_AS(ParseRule("Q"), ParseError);
  CHECK_THROWS_AS(ParseRule("M"), ParseError);

  std::vector<double> parts = {-10.0, -12.0};
  CHECK(FAverageLogLik(parts) == -22.0);
  std::vector<double> swapped = {-12.0, -10.0};
  CHECK(FAverageLogLik(swapped) == FAverageLogLik(parts));
  CHECK_THROWS_AS(FAverageLogLik({}), ConfigError);
  std::vector<double> five(5, -2.0);
  CHECK(SectorSumLogLik(five) == doctest::Approx(-10.0));
  CHECK_THROWS_AS(SectorSumLogLik({}), ConfigError);
}

namespace {

ModelBank ToyBank(const std::vector<char> &sectors, std::vector<int> fset,
                  std::vector<int> cset, int frame_dim) {
  ModelBank bank;
  bank.basis = "WAVE_DCT";
  bank.frame_dim = frame_dim;
  bank.classes = {"a", "b"};
  bank.sectors = sectors;
  bank.frame_counts = std::move(fset);
  bank.component_counts = std::move(cset);
  bank.component_weights = UniformWeights(bank.component_counts.size());
  bank.zero_mean = true;
  for (const auto &cls : bank.classes) {
    double var = cls == "a" ? 0.5 : 2.0;
    for (char s : bank.sectors)
      for (int f : bank.frame_counts)
        for (int c : bank.component_counts) {
          // Duplicate the single Gaussian c times with equal weights.
          std::vector<DiagGaussianComponent> comps(c);
          for (auto &comp : comps) {
            comp.weight = 1.0 / c;
            comp.mean.assign(f * frame_dim, 0.0);
            comp.var.assign(f * frame_dim, var);
          }
          bank.Insert(cls, s, f, c, DiagGmm(comps, "WAVE_DCT", true));
        }
  }
  return bank;
}

}  // namespace

TEST_CASE("reduction chain: single cell reduces to the plain likelihood rule") {
  const int frame_dim = 4;
  ModelBank bank = ToyBank({'C'}, {1}, {1}, frame_dim);
  FeatureMatrix features =
      RampFeatures(FeatureBasis::kWaveDct, 30, frame_dim, 0.01, 0.01);

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    PhonemeInstance inst;
    inst.sentence_id = "s";
    inst.interval = {"a", 800 + 160 * (trial % 10), 2400 + 160 * (trial % 10)};
    inst.center = (inst.interval.start + inst.interval.end) / 2;
    InstanceAssemblies assemblies = BuildAssemblies(
        features, inst, bank.sectors, bank.frame_counts);
    std::vector<double> t_scores =
        ScoreInstance(bank, assemblies, ParseRule("T"));
    // Direct Eq.-style evaluation on the same assembly.
    const std::vector<double> &x = assemblies.vectors[0][0];
    for (size_t k = 0; k < bank.classes.size(); ++k) {
      double direct =
          bank.Model(bank.classes[k], 'C', 1, 1).LogLikelihood(x);
      CHECK(t_scores[k] == doctest::Approx(direct).epsilon(1e-13));
    }
  }
}

TEST_CASE("T decomposes into sector and frame-count sums") {
  const int frame_dim = 3;
  ModelBank bank = ToyBank({'A', 'B', 'C', 'D', 'E'}, {1, 3}, {1, 2}, frame_dim);
  FeatureMatrix features =
      RampFeatures(FeatureBasis::kWaveDct, 50, frame_dim, 0.01, 0.01);
  PhonemeInstance inst;
  inst.sentence_id = "s";
  inst.interval = {"a", 1600, 4000};
  inst.center = 2800;

  InstanceAssemblies assemblies =
      BuildAssemblies(features, inst, bank.sectors, bank.frame_counts);
  std::vector<double> t = ScoreInstance(bank, assemblies, ParseRule("T"));

  for (size_t k = 0; k < bank.classes.size(); ++k) {
    double sum = 0.0;
    for (size_t si = 0; si < bank.sectors.size(); ++si) {
      for (size_t fi = 0; fi < bank.frame_counts.size(); ++fi) {
        std::vector<double> lls;
        for (int c : bank.component_counts)
          lls.push_back(bank.Model(bank.classes[k], bank.sectors[si],
                                   bank.frame_counts[fi], c)
                            .LogLikelihood(assemblies.vectors[si][fi]));
        sum += CombineModelLogLiks(lls, bank.component_weights);
      }
    }
    CHECK(t[k] == doctest::Approx(sum).epsilon(1e-12));
  }

  // Identical sector models and vectors: S = 5 * M.
  InstanceAssemblies same = assemblies;
  for (size_t si = 1; si < same.vectors.size(); ++si)
    same.vectors[si] = same.vectors[0];
  std::vector<double> s5 = ScoreInstance(bank, same, ParseRule("S:1"));
  std::vector<double> m1 = ScoreInstance(bank, [&] {
        InstanceAssemblies only_c;
        only_c.vectors = same.vectors;
        return only_c;
      }(), ParseRule("M:1"));
  for (size_t k = 0; k < bank.classes.size(); ++k)
    CHECK(s5[k] == doctest::Approx(5.0 * m1[k]).epsilon(1e-12));
}

TEST_CASE("predict maximizes score plus log prior with stable ties") {
  std::vector<std::string> classes = {"a", "b", "c"};
  std::vector<double> equal_priors = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::vector<double> scores = {-5.0, -3.0, -9.0};
  Prediction pred = Predict(scores, equal_priors, classes);
  CHECK(pred.class_index == 1);
  CHECK(pred.class_id == "b");

  std::vector<double> same_scores = {-2.0, -2.0, -2.0};
  std::vector<double> priors = {0.2, 0.5, 0.3};
  CHECK(Predict(same_scores, priors, classes).class_id == "b");

  // Exact tie after priors: lowest class index.
  std::vector<double> tie_scores = {std::log(0.5), std::log(0.2), -50.0};
  std::vector<double> tie_priors = {0.2, 0.5, 0.3};
  CHECK(Predict(tie_scores, tie_priors, classes).class_index == 0);

  // Adding a constant to every class leaves the prediction unchanged.
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> s(3);
    for (double &v : s) v = 10.0 * rng.Gaussian();
    int before = Predict(s, priors, classes).class_index;
    double shift = 100.0 * rng.Gaussian();
    for (double &v : s) v += shift;
    CHECK(Predict(s, priors, classes).class_index == before);
  }

  CHECK_THROWS_AS(Predict({}, {}, {}), ConfigError);
  std::vector<double> bad_priors = {0.5, 0.4, 0.4};
  CHECK_THROWS_AS(Predict(scores, bad_priors, classes), ValidationError);
}

TEST_CASE("alpha schedule hits 0.5 at the midpoint with the right limits") {
  CombinationSchedule schedule{11.0, 0.3, AlphaUnits::kDb};
  CHECK(AlphaAt(schedule, 11.0) == 0.5);
  CHECK(AlphaAt(schedule, -1e9) == doctest::Approx(0.0));
  CHECK(AlphaAt(schedule, 1e9) == doctest::Approx(1.0));
  for (double v = -20.0; v < 30.0; v += 1.0)
    CHECK(AlphaAt(schedule, v + 1.0) > AlphaAt(schedule, v));

  CHECK(AlphaForCondition(schedule, SnrCondition::Quiet()) == 0.0);
  // dB units read the noise variance in dB: the midpoint noise level 11 dB
  // corresponds to an SNR of -11 dB.
  CHECK(AlphaForCondition(schedule, SnrCondition::Db(-11.0)) == 0.5);
  CHECK(AlphaForCondition(schedule, SnrCondition::Db(0.0)) <
        AlphaForCondition(schedule, SnrCondition::Db(-6.0)));

  CombinationSchedule linear{1.0, 0.5, AlphaUnits::kLinear};
  CHECK(AlphaForCondition(linear, SnrCondition::Quiet()) ==
        doctest::Approx(1.0 / (1.0 + std::exp(0.5))));

  CombinationSchedule bad{0.0, -1.0, AlphaUnits::kDb};
  CHECK_THROWS_AS(AlphaAt(bad, 0.0), ValidationError);
}

TEST_CASE("combination endpoints reproduce the stream argmaxes exactly") {
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> cep(5), wave(5);
    for (int k = 0; k < 5; ++k) {
      cep[k] = 50.0 * rng.Gaussian();
      wave[k] = 50.0 * rng.Gaussian();
    }
    std::vector<double> at0 = CombineLogLiks(cep, wave, 0.0);
    std::vector<double> at1 = CombineLogLiks(cep, wave, 1.0);
    CHECK(at0 == cep);
    CHECK(at1 == wave);
  }

  // Dimension-normalized mode divides per stream.
  std::vector<double> cep = {-52.0, -104.0};
  std::vector<double> wave = {-1024.0, -2048.0};
  std::vector<double> mixed = CombineLogLiks(cep, wave, 0.5,
                                             CombineMode::kDimNormalized,
                                             52.0, 1024.0);
  CHECK(mixed[0] == doctest::Approx(0.5 * (-1.0) + 0.5 * (-1.0)).epsilon(1e-12));
  CHECK(mixed[1] == doctest::Approx(0.5 * (-2.0) + 0.5 * (-2.0)).epsilon(1e-12));

  std::vector<double> three(3, 0.0);
  CHECK_THROWS_AS(CombineLogLiks(cep, three, 0.5), ConfigError);
  CHECK_THROWS_AS(CombineLogLiks(cep, wave, 1.5), ValidationError);
}

TEST_CASE("prediction is piecewise constant in alpha on a toy table") {
  // Two classes: the prediction can switch at most once as alpha rises.
  std::vector<double> cep = {0.0, -4.0};
  std::vector<double> wave = {-9.0, 0.0};
  std::vector<std::string> classes = {"a", "b"};
  std::vector<double> priors = {0.5, 0.5};
  int switches = 0;
  int prev = Predict(CombineLogLiks(cep, wave, 0.0), priors, classes).class_index;
  for (int g = 1; g <= 100; ++g) {
    int cur = Predict(CombineLogLiks(cep, wave, g / 100.0), priors, classes)
                  .class_index;
    if (cur != prev) ++switches;
    prev = cur;
  }
  CHECK(switches <= 1);
}

TEST_CASE("score dumps round-trip") {
  namespace fs = std::filesystem;
  ScoreDump dump;
  dump.condition = "snr+06db";
  dump.rule = "T";
  dump.basis = "WAVE_DCT";
  dump.classes = {"a", "b"};
  dump.instance_ids = {"s0:100:0", "s1:200:-25"};
  dump.truths = {"a", "b"};
  dump.scores = {{-1.5, -2.5}, {-0.25, -0.125}};
  dump.config_hash = "abcd";
  dump.seed = 11;
  std::string path = (fs::temp_directory_path() / "wc-scores.txt").string();
  SaveScoreDump(dump, path);
  ScoreDump back = LoadScoreDump(path);
  CHECK(back.condition == dump.condition);
  CHECK(back.classes == dump.classes);
  CHECK(back.instance_ids == dump.instance_ids);
  CHECK(back.truths == dump.truths);
  CHECK(back.scores == dump.scores);
  CHECK(back.seed == 11);
  fs::remove(path);
}

namespace {

// Per-condition dumps whose combined error is V-shaped with its minimum at a
// known target alpha: every instance carries a switch point alpha*, correct
// on one side of it only.
void AddSwitchInstance(ScoreDump *cep, ScoreDump *wave, int index,
                       double alpha_star, bool wave_side) {
  std::string id = "s" + std::to_string(index);
  cep->instance_ids.push_back(id);
  wave->instance_ids.push_back(id);
  cep->truths.push_back("a");
  wave->truths.push_back("a");
  if (wave_side) {
    // Correct only for alpha > alpha*.
    cep->scores.push_back({0.0, alpha_star});
    wave->scores.push_back({1.0 - alpha_star, 0.0});
  } else {
    // Correct only for alpha < alpha*.
    cep->scores.push_back({alpha_star, 0.0});
    wave->scores.push_back({0.0, 1.0 - alpha_star});
  }
}

std::pair<ScoreDump, ScoreDump> MakeSwitchDumps(const std::string &condition,
                                                double target) {
  ScoreDump cep, wave;
  cep.condition = wave.condition = condition;
  cep.rule = wave.rule = "T";
  cep.basis = "MFCC";
  wave.basis = "WAVE_DCT";
  cep.classes = wave.classes = {"a", "b"};
  int index = 0;
  const int half = 40;
  for (int i = 0; i < half; ++i) {
    double above = target + (1.0 - target) * (i + 1.0) / (half + 1.0);
    AddSwitchInstance(&cep, &wave, index++, above, /*wave_side=*/false);
    double below = target * i / half;
    AddSwitchInstance(&cep, &wave, index++, below, /*wave_side=*/true);
  }
  return {cep, wave};
}

}  // namespace

TEST_CASE("alpha fitting finds the per-condition bands and a monotone fit") {
  std::vector<std::pair<std::string, double>> plan = {
      {"quiet", 0.03}, {"snr+18db", 0.2}, {"snr+06db", 0.4},
      {"snr-06db", 0.65}, {"snr-18db", 0.9}};
  std::vector<ScoreDump> cep, wave;
  for (const auto &[cond, target] : plan) {
    auto [c, w] = MakeSwitchDumps(cond, target);
    cep.push_back(std::move(c));
    wave.push_back(std::move(w));
  }
  std::map<std::string, double> priors = {{"a", 0.5}, {"b", 0.5}};
  ClassMap map = ClassMap::Identity({"a", "b"});

  // Hand check of the combined error at the extremes for one condition:
  // at alpha=0 the cep-type instances are all correct, the wave-type wrong.
  CHECK(CombinedError(cep[1], wave[1], 0.0, priors, map, CombineMode::kRaw, 1,
                      1) == doctest::Approx(0.5).epsilon(0.03));

  AlphaFitResult fit = FitAlphaSchedule(cep, wave, priors, map);
  REQUIRE(fit.bands.size() == plan.size());
  for (size_t i = 0; i < plan.size(); ++i) {
    CHECK(fit.bands[i].lo <= plan[i].second + 0.03);
    CHECK(fit.bands[i].hi >= plan[i].second - 0.03);
    CHECK(fit.bands[i].best_error <= 0.05);
  }
  CHECK(fit.schedule.beta > 0.0);
  // Fitted alpha decreases as the SNR rises (increases with noise).
  double prev = AlphaForCondition(fit.schedule, SnrCondition::Db(18));
  for (double snr : {6.0, -6.0, -18.0}) {
    double cur = AlphaForCondition(fit.schedule, SnrCondition::Db(snr));
    CHECK(cur > prev);
    prev = cur;
  }

  namespace fs = std::filesystem;
  std::string path = (fs::temp_directory_path() / "wc-schedule.txt").string();
  SaveSchedule(fit, path, "hash", 3);
  AlphaFitResult back = LoadSchedule(path);
  CHECK(back.schedule.midpoint == fit.schedule.midpoint);
  CHECK(back.schedule.beta == fit.schedule.beta);
  CHECK(back.bands.size() == fit.bands.size());
  fs::remove(path);
}
