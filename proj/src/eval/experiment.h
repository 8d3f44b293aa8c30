// eval/experiment.h

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

#ifndef WAVECLASS_EVAL_EXPERIMENT_H_
#define WAVECLASS_EVAL_EXPERIMENT_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "adapt/adapt.h"
#include "classifier/rules.h"
#include "classifier/score-dump.h"
#include "corpus/manifest.h"
#include "density/em.h"
#include "density/model-bank.h"
#include "eval/scoring.h"
#include "frontend/cmvn.h"
#include "frontend/mfcc.h"
#include "frontend/noise.h"

namespace waveclass {

enum class AdaptationPolicy { kAdapt, kCmvn, kMatched, kNone };

std::string PolicyName(AdaptationPolicy policy);
AdaptationPolicy PolicyFromName(const std::string &name);

enum class CmvnMode { kOff, kTrainset, kSentence };

struct PipelineConfig {
  FeatureBasis basis = FeatureBasis::kWaveDct;
  int dct_block = 160;
  MfccOptions mfcc;
  CmvnMode cmvn = CmvnMode::kTrainset;  // cepstral bases only
  std::vector<char> sectors = {'A', 'B', 'C', 'D', 'E'};
  std::vector<int> frame_counts;        // empty -> per-basis default
  std::vector<int> component_counts = {1, 2, 4, 8, 16, 32, 64, 128};
  // Replaces the uniform model-average weights by per-slice posterior
  // weights estimated on a held-out tenth of the training instances.
  bool posterior_weights = false;
  EmOptions em;
  uint64_t seed = 0;
  int workers = 1;
  std::string config_hash;
  std::string external_dir;  // feature files for FeatureBasis::kExternal
  // When set, sentence features precomputed by the `features` command are
  // read from here instead of recomputed, provided their recorded config
  // hash matches config_hash.  Text round-trips at full precision, so cached
  // and recomputed paths agree bit for bit.
  std::string cache_dir;
};

// Frame-count defaults per representation, centered on the lengths that
// classify best for each.
std::vector<int> DefaultFrameCounts(FeatureBasis basis);

struct ExperimentData {
  std::map<std::string, SentenceWaveform> train_waves;  // normalized
  std::map<std::string, SentenceWaveform> test_waves;
  CorpusManifest train_manifest;
  CorpusManifest test_manifest;
  ClassMap class_map;
  std::shared_ptr<NoiseSource> noise;
};

// Binds one corpus + configuration and runs the train / adapt / classify /
// sweep pipeline on it.  All randomness is derived from the master seed and
// stable task tags, so results do not depend on worker count or call order.
class Experiment {
 public:
  Experiment(ExperimentData data, PipelineConfig config);

  // Noisy (or quiet) features per sentence of one split; no standardization.
  std::map<std::string, FeatureMatrix> ComputeFeatures(
      const std::string &split, SnrCondition condition) const;

  // Trains the full (class, sector, f, c) family on the given condition's
  // training data; quiet is the normal case, others serve MATCHED baselines.
  ModelBank TrainBank(SnrCondition train_condition);

  struct EvalResult {
    EvaluationReport report;
    ScoreDump dump;
  };

  EvalResult Evaluate(const ModelBank &quiet_bank, SnrCondition condition,
                      AdaptationPolicy policy, const Rule &rule);

  std::vector<EvalResult> Sweep(const std::vector<SnrCondition> &conditions,
                                AdaptationPolicy policy, const Rule &rule,
                                const ModelBank &quiet_bank);

  // Per-frame noise covariance diagonal for the configured noise source.
  NoiseSpec FrameNoiseSpec(double sigma2) const;

  const ExperimentData &data() const { return data_; }
  const PipelineConfig &config() const { return config_; }
  int FrameDim() const;

 private:
  FeatureMatrix SentenceFeatures(const SentenceWaveform &quiet_wave,
                                 const std::string &split,
                                 SnrCondition condition) const;
  StandardizationStats TrainsetStats(SnrCondition condition);
  ModelBank TrainBankImpl(SnrCondition train_condition);
  // Most recent test-split feature set, reused across repeated evaluations
  // of the same condition (rule comparisons, combination fits).
  std::shared_ptr<const std::map<std::string, FeatureMatrix>> TestFeatures(
      SnrCondition condition);

  ExperimentData data_;
  PipelineConfig config_;
  std::map<std::string, StandardizationStats> stats_cache_;
  std::map<std::string, ModelBank> matched_banks_;
  std::unique_ptr<AdaptedBankCache> adapt_cache_;
  const ModelBank *adapt_cache_source_ = nullptr;
  std::vector<double> noise_pattern_;  // estimated once for file noise
  std::string test_features_key_;
  std::shared_ptr<const std::map<std::string, FeatureMatrix>> test_features_;
};

}  // namespace waveclass

#endif  // WAVECLASS_EVAL_EXPERIMENT_H_
