// eval/experiment.cc

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

#include "eval/experiment.h"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <set>

#include "base/error.h"
#include "base/rng.h"
#include "base/thread-pool.h"
#include "classifier/anchors.h"
#include "classifier/assembly.h"
#include "density/em.h"
#include "density/model-average.h"
#include "frontend/deltas.h"
#include "frontend/dct.h"
#include "frontend/external-features.h"

namespace waveclass {

std::string PolicyName(AdaptationPolicy policy) {
  switch (policy) {
    case AdaptationPolicy::kAdapt: return "adapt";
    case AdaptationPolicy::kCmvn: return "cmvn";
    case AdaptationPolicy::kMatched: return "matched";
    case AdaptationPolicy::kNone: return "none";
  }
  throw ValidationError("unreachable policy");
}

AdaptationPolicy PolicyFromName(const std::string &name) {
  if (name == "adapt") return AdaptationPolicy::kAdapt;
  if (name == "cmvn") return AdaptationPolicy::kCmvn;
  if (name == "matched") return AdaptationPolicy::kMatched;
  if (name == "none") return AdaptationPolicy::kNone;
  throw ParseError("unknown adaptation policy: " + name);
}

std::vector<int> DefaultFrameCounts(FeatureBasis basis) {
  switch (basis) {
    case FeatureBasis::kWaveDct: return {5, 7, 9, 11, 13};
    case FeatureBasis::kMfcc:
    case FeatureBasis::kMfccDeltas:
    case FeatureBasis::kExternal: return {7, 9, 11, 13, 15};
  }
  throw ValidationError("unreachable basis");
}

Experiment::Experiment(ExperimentData data, PipelineConfig config)
    : data_(std::move(data)), config_(std::move(config)) {
  if (config_.frame_counts.empty())
    config_.frame_counts = DefaultFrameCounts(config_.basis);
  for (int f : config_.frame_counts)
    if (f < 1 || f % 2 == 0)
      throw ValidationError("frame counts must be odd and positive");
  if (config_.sectors.empty())
    throw ConfigError("at least one sector is required");
  if (!data_.noise) data_.noise = std::make_shared<WhiteNoiseSource>();
}

int Experiment::FrameDim() const {
  switch (config_.basis) {
    case FeatureBasis::kWaveDct: return config_.dct_block;
    case FeatureBasis::kMfcc: return config_.mfcc.num_ceps;
    case FeatureBasis::kMfccDeltas: return 3 * config_.mfcc.num_ceps;
    case FeatureBasis::kExternal: {
      if (data_.train_waves.empty() && data_.test_waves.empty())
        throw ConfigError("external basis needs sentences to size features");
      // Read one feature file lazily in SentenceFeatures; dimension is fixed
      // by the first file.  Here we probe the first train sentence.
      const auto &sid = data_.train_waves.empty()
                            ? data_.test_waves.begin()->first
                            : data_.train_waves.begin()->first;
      FeatureMatrix m = ReadFeatureFile(config_.external_dir + "/" + sid +
                                            ".feat",
                                        FeatureBasis::kExternal);
      return m.dim;
    }
  }
  throw ValidationError("unreachable basis");
}

namespace {

std::string CacheBasisName(FeatureBasis basis) {
  std::string name = BasisName(basis);
  for (char &c : name) c = static_cast<char>(std::tolower(c));
  return name;
}

// Loads a cache file if present and stamped with the expected config hash.
bool TryReadCachedFeatures(const std::string &path,
                           const std::string &config_hash, FeatureBasis basis,
                           double rate, FeatureMatrix *out) {
  std::ifstream probe(path);
  if (!probe) return false;
  std::string first_line;
  std::getline(probe, first_line);
  if (first_line.rfind("# config_hash=" + config_hash + " ", 0) != 0)
    return false;
  probe.close();
  FeatureMatrix m = ReadFeatureFile(path, basis, rate);
  m.basis = basis;
  *out = std::move(m);
  return true;
}

}  // namespace

FeatureMatrix Experiment::SentenceFeatures(const SentenceWaveform &quiet_wave,
                                           const std::string &split,
                                           SnrCondition condition) const {
  if (!config_.cache_dir.empty() && config_.basis != FeatureBasis::kExternal) {
    std::string path = config_.cache_dir + "/" + quiet_wave.sentence_id + "." +
                       CacheBasisName(config_.basis) + "." + condition.Name() +
                       "." + split + ".feat";
    FeatureMatrix cached;
    if (TryReadCachedFeatures(path, config_.config_hash, config_.basis,
                              quiet_wave.rate, &cached))
      return cached;
  }
  if (config_.basis == FeatureBasis::kExternal) {
    if (!condition.quiet)
      throw ConfigError(
          "external features are precomputed; only quiet conditions can be "
          "re-derived here");
    return ReadFeatureFile(config_.external_dir + "/" +
                               quiet_wave.sentence_id + ".feat",
                           FeatureBasis::kExternal, quiet_wave.rate);
  }
  uint64_t seed = SentenceSeed(config_.seed, split + "/" + condition.Name(),
                               quiet_wave.sentence_id);
  SentenceWaveform noisy = MixNoise(quiet_wave, *data_.noise, condition, seed);
  switch (config_.basis) {
    case FeatureBasis::kWaveDct:
      return WaveDctFeatures(noisy, config_.dct_block);
    case FeatureBasis::kMfcc:
      return MfccFeatures(noisy, config_.mfcc);
    case FeatureBasis::kMfccDeltas:
      return AppendDeltas(MfccFeatures(noisy, config_.mfcc));
    default:
      throw ValidationError("unreachable basis");
  }
}

std::map<std::string, FeatureMatrix> Experiment::ComputeFeatures(
    const std::string &split, SnrCondition condition) const {
  const auto &waves = split == "train" ? data_.train_waves : data_.test_waves;
  std::vector<const SentenceWaveform *> order;
  order.reserve(waves.size());
  for (const auto &[sid, wave] : waves) order.push_back(&wave);

  std::vector<FeatureMatrix> results(order.size());
  RunParallel(static_cast<int>(order.size()), config_.workers, [&](int i) {
    results[i] = SentenceFeatures(*order[i], split, condition);
  });
  std::map<std::string, FeatureMatrix> out;
  for (size_t i = 0; i < order.size(); ++i)
    out[order[i]->sentence_id] = std::move(results[i]);
  return out;
}

std::shared_ptr<const std::map<std::string, FeatureMatrix>>
Experiment::TestFeatures(SnrCondition condition) {
  if (test_features_key_ != condition.Name() || !test_features_) {
    test_features_ = std::make_shared<const std::map<std::string, FeatureMatrix>>(
        ComputeFeatures("test", condition));
    test_features_key_ = condition.Name();
  }
  return test_features_;
}

StandardizationStats Experiment::TrainsetStats(SnrCondition condition) {
  std::string key = condition.Name();
  auto it = stats_cache_.find(key);
  if (it != stats_cache_.end()) return it->second;
  auto features = ComputeFeatures("train", condition);
  std::vector<const FeatureMatrix *> mats;
  mats.reserve(features.size());
  for (const auto &[sid, m] : features) mats.push_back(&m);
  StandardizationStats stats = ComputeStats(mats, StatsSource::kTrainset);
  stats_cache_[key] = stats;
  return stats;
}

namespace {

bool IsCepstral(FeatureBasis basis) { return !IsLinearBasis(basis); }

std::string InstanceId(const PhonemeInstance &inst) {
  return inst.sentence_id + ":" + std::to_string(inst.interval.start) + ":" +
         std::to_string(inst.shift);
}

void Standardize(std::map<std::string, FeatureMatrix> *features, CmvnMode mode,
                 const StandardizationStats *trainset_stats,
                 int *floored_dims) {
  if (mode == CmvnMode::kOff) return;
  for (auto &[sid, m] : *features) {
    if (mode == CmvnMode::kTrainset) {
      m = ApplyCmvn(m, *trainset_stats);
    } else {
      StandardizationStats stats = ComputeSentenceStats(m);
      if (floored_dims) *floored_dims += stats.floored_dims;
      m = ApplyCmvn(m, stats);
    }
  }
  if (floored_dims && mode == CmvnMode::kTrainset && trainset_stats)
    *floored_dims += trainset_stats->floored_dims;
}

}  // namespace

ModelBank Experiment::TrainBank(SnrCondition train_condition) {
  return TrainBankImpl(train_condition);
}

ModelBank Experiment::TrainBankImpl(SnrCondition train_condition) {
  auto features = ComputeFeatures("train", train_condition);
  int floored = 0;
  if (IsCepstral(config_.basis) && config_.cmvn != CmvnMode::kOff) {
    StandardizationStats stats;
    if (config_.cmvn == CmvnMode::kTrainset) stats = TrainsetStats(train_condition);
    Standardize(&features, config_.cmvn,
                config_.cmvn == CmvnMode::kTrainset ? &stats : nullptr,
                &floored);
  }

  ModelBank bank;
  bank.basis = BasisName(config_.basis);
  bank.frame_dim = FrameDim();
  bank.sectors = config_.sectors;
  bank.frame_counts = config_.frame_counts;
  bank.component_counts = config_.component_counts;
  bank.component_weights = UniformWeights(config_.component_counts.size());
  bank.zero_mean = IsLinearBasis(config_.basis);
  bank.config_hash = config_.config_hash;
  bank.seed = config_.seed;

  std::set<std::string> class_set;
  for (const auto &inst : data_.train_manifest.instances)
    class_set.insert(inst.group48);
  bank.classes.assign(class_set.begin(), class_set.end());

  // Group instances per class once.
  std::map<std::string, std::vector<const PhonemeInstance *>> by_class;
  for (const auto &inst : data_.train_manifest.instances)
    by_class[inst.group48].push_back(&inst);

  struct Task {
    const std::string *cls;
    char sector;
    int f;
  };
  std::vector<Task> tasks;
  for (const auto &cls : bank.classes)
    for (char s : bank.sectors)
      for (int f : bank.frame_counts) tasks.push_back({&cls, s, f});

  struct TaskResult {
    std::vector<DiagGmm> models;                  // per component count
    std::vector<std::vector<double>> slice_u;     // optional posterior weights
  };
  std::vector<TaskResult> results(tasks.size());

  RunParallel(static_cast<int>(tasks.size()), config_.workers, [&](int ti) {
    const Task &task = tasks[ti];
    const auto &instances = by_class.at(*task.cls);
    const int dim = task.f * bank.frame_dim;

    // Deterministic held-out tenth for posterior weights.
    std::vector<double> train_flat, dev_flat;
    for (size_t i = 0; i < instances.size(); ++i) {
      const PhonemeInstance &inst = *instances[i];
      auto sentence = features.find(inst.sentence_id);
      if (sentence == features.end())
        throw ConfigError("no features for sentence " + inst.sentence_id);
      double anchor = static_cast<double>(
          AnchorForSector(inst.interval, task.sector) + inst.shift);
      std::vector<double> x = AssembleFrames(sentence->second, anchor, task.f);
      bool dev = config_.posterior_weights && i % 10 == 0;
      auto &dst = dev ? dev_flat : train_flat;
      dst.insert(dst.end(), x.begin(), x.end());
    }
    DataView view(train_flat, dim);

    TaskResult &out = results[ti];
    out.models.reserve(bank.component_counts.size());
    for (int c : bank.component_counts) {
      uint64_t seed = DeriveSeed(
          config_.seed, "em/" + *task.cls + "/" + std::string(1, task.sector) +
                            "/" + std::to_string(task.f) + "/" +
                            std::to_string(c));
      out.models.push_back(EmTrain(view, c, bank.zero_mean, seed, bank.basis,
                                   config_.em));
    }
    if (config_.posterior_weights) {
      DataView dev_view(dev_flat, dim);
      std::vector<const DiagGmm *> model_ptrs;
      for (const auto &m : out.models) model_ptrs.push_back(&m);
      out.slice_u.push_back(PosteriorWeights(model_ptrs, dev_view));
    }
  });

  for (size_t ti = 0; ti < tasks.size(); ++ti) {
    const Task &task = tasks[ti];
    for (size_t ci = 0; ci < bank.component_counts.size(); ++ci)
      bank.Insert(*task.cls, task.sector, task.f, bank.component_counts[ci],
                  std::move(results[ti].models[ci]));
    if (config_.posterior_weights)
      bank.slice_weights[{*task.cls, task.sector, task.f}] =
          results[ti].slice_u[0];
  }
  bank.Validate();
  return bank;
}

NoiseSpec Experiment::FrameNoiseSpec(double sigma2) const {
  const int frame_dim = config_.dct_block;
  if (data_.noise->IsWhite())
    return WhiteNoiseSpec(frame_dim, sigma2, BasisName(config_.basis));
  if (noise_pattern_.empty()) {
    auto *file_noise = dynamic_cast<const FileNoiseSource *>(data_.noise.get());
    if (file_noise == nullptr)
      throw ConfigError("noise covariance estimation needs a sample file");
    auto *self = const_cast<Experiment *>(this);
    self->noise_pattern_ =
        EstimateNoiseCovDiag(file_noise->samples(), frame_dim);
  }
  return NoiseSpecForDim(noise_pattern_, frame_dim, sigma2,
                         BasisName(config_.basis), data_.noise->Id());
}

Experiment::EvalResult Experiment::Evaluate(const ModelBank &quiet_bank,
                                            SnrCondition condition,
                                            AdaptationPolicy policy,
                                            const Rule &rule) {
  auto start_time = std::chrono::steady_clock::now();

  if (policy == AdaptationPolicy::kAdapt && !IsLinearBasis(config_.basis))
    throw ConfigError("ADAPT policy needs a linear basis; use CMVN or MATCHED");
  if (policy == AdaptationPolicy::kAdapt && quiet_bank.adapted)
    throw ConfigError("ADAPT policy starts from a quiet-trained bank");
  if (policy == AdaptationPolicy::kCmvn && !IsCepstral(config_.basis))
    throw ConfigError("CMVN policy applies to cepstral bases only");

  auto raw_features = TestFeatures(condition);
  std::map<std::string, FeatureMatrix> features = *raw_features;
  int floored = 0;

  if (IsCepstral(config_.basis) && config_.cmvn != CmvnMode::kOff) {
    // Which statistics standardize the noisy test features is the policy:
    // CMVN uses the training set corrupted at the test condition; NONE and
    // MATCHED-in-quiet use what training used.
    SnrCondition stats_condition = SnrCondition::Quiet();
    if (policy == AdaptationPolicy::kCmvn ||
        policy == AdaptationPolicy::kMatched)
      stats_condition = condition;
    StandardizationStats stats;
    if (config_.cmvn == CmvnMode::kTrainset) stats = TrainsetStats(stats_condition);
    Standardize(&features, config_.cmvn,
                config_.cmvn == CmvnMode::kTrainset ? &stats : nullptr,
                &floored);
  }

  // Pick the scoring bank.
  const ModelBank *bank = &quiet_bank;
  std::shared_ptr<const ModelBank> adapted;
  if (policy == AdaptationPolicy::kAdapt) {
    if (!adapt_cache_ || adapt_cache_source_ != &quiet_bank) {
      adapt_cache_ = std::make_unique<AdaptedBankCache>(
          std::make_shared<const ModelBank>(quiet_bank));
      adapt_cache_source_ = &quiet_bank;
    }
    adapted = adapt_cache_->Get(FrameNoiseSpec(condition.Sigma2()));
    bank = adapted.get();
  } else if (policy == AdaptationPolicy::kMatched) {
    if (data_.train_waves.empty() || data_.train_manifest.instances.empty())
      throw ConfigError("MATCHED policy needs per-condition training data");
    auto it = matched_banks_.find(condition.Name());
    if (it == matched_banks_.end())
      it = matched_banks_.emplace(condition.Name(), TrainBankImpl(condition))
               .first;
    bank = &it->second;
  }

  const auto &instances = data_.test_manifest.instances;
  std::vector<double> priors =
      AlignedPriors(data_.train_manifest.priors, bank->classes);

  std::vector<std::string> predictions(instances.size());
  std::vector<std::string> truths(instances.size());
  ScoreDump dump;
  dump.condition = condition.Name();
  dump.rule = rule.Name();
  dump.basis = bank->basis;
  dump.classes = bank->classes;
  dump.config_hash = config_.config_hash;
  dump.seed = config_.seed;
  dump.instance_ids.resize(instances.size());
  dump.truths.resize(instances.size());
  dump.scores.resize(instances.size());

  RunParallel(static_cast<int>(instances.size()), config_.workers, [&](int i) {
    const PhonemeInstance &inst = instances[i];
    auto sentence = features.find(inst.sentence_id);
    if (sentence == features.end())
      throw ConfigError("no features for sentence " + inst.sentence_id);
    InstanceAssemblies assemblies = BuildAssemblies(
        sentence->second, inst, bank->sectors, bank->frame_counts);
    std::vector<double> scores = ScoreInstance(*bank, assemblies, rule);
    Prediction pred = Predict(scores, priors, bank->classes);
    predictions[i] = pred.class_id;
    truths[i] = inst.group48;
    dump.instance_ids[i] = InstanceId(inst);
    dump.truths[i] = inst.group48;
    dump.scores[i] = std::move(scores);
  });

  EvalResult result;
  result.report = Score(predictions, truths, data_.class_map);
  result.report.condition = condition.Name();
  result.report.rule = rule.Name();
  result.report.floored_dims = floored;
  result.report.config_hash = config_.config_hash;
  result.report.seed = config_.seed;
  result.report.notes =
      "policy=" + PolicyName(policy) + " basis=" + bank->basis;
  result.report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  result.dump = std::move(dump);
  return result;
}

std::vector<Experiment::EvalResult> Experiment::Sweep(
    const std::vector<SnrCondition> &conditions, AdaptationPolicy policy,
    const Rule &rule, const ModelBank &quiet_bank) {
  std::vector<EvalResult> results;
  results.reserve(conditions.size());
  for (const SnrCondition &condition : conditions)
    results.push_back(Evaluate(quiet_bank, condition, policy, rule));
  return results;
}

}  // namespace waveclass
