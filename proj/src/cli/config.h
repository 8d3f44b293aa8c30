// cli/config.h

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

#ifndef WAVECLASS_CLI_CONFIG_H_
#define WAVECLASS_CLI_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frontend/feature-matrix.h"

namespace waveclass {

// Flat key = value configuration with an `include` directive; CLI flags
// override file values.  Every run must carry an explicit seed.
struct ExperimentConfig {
  // Paths.
  std::string corpus_dir;
  std::string train_list = "train.list";
  std::string test_list = "test.list";
  std::string fold48;
  std::string fold39;
  std::string noise = "white";  // "white" or a sample file path
  std::string out = "out";
  std::string external_dir;
  std::string experiment = "default";

  // Frontend.
  std::string basis = "wave_dct";  // wave_dct | mfcc | mfcc_deltas | external
  int dct_block = 160;
  std::string cmvn = "trainset";   // trainset | sentence | off

  // Classifier structure.
  std::vector<int> frames;  // empty -> per-basis default
  std::string sectors = "ABCDE";
  std::vector<int> components = {1, 2, 4, 8, 16, 32, 64, 128};
  bool posterior_weights = false;
  std::string rule = "T";

  // Corpus protocol.
  int64_t augment_threshold = 1500;
  std::vector<int64_t> shifts = {-100, -75, -50, -25, 25, 50, 75, 100};

  // Experiment grid.
  std::vector<std::string> snr_grid = {"-18", "-12", "-6", "0",    "6",
                                       "12",  "18",  "24", "30", "quiet"};
  std::string policy = "adapt";

  // Stream combination.
  std::string alpha_units = "db";
  std::string combine_mode = "raw";  // raw | dim_normalized
  double d_cep = 1.0;
  double d_wave = 1.0;

  // Synthetic corpus generation.
  int synth_train_sentences = 40;
  int synth_test_sentences = 20;
  int synth_phones_per_sentence = 8;

  uint64_t seed = 0;
  bool seed_set = false;
  int workers = 1;

  // Sorted key=value view of every field, for hashing and provenance.
  std::map<std::string, std::string> Canonical() const;
};

// Applies "key = value"; throws ConfigError naming the unknown key.
void ApplyConfigValue(ExperimentConfig *config, const std::string &key,
                      const std::string &value);

// Reads the file, following `include` directives relative to it.
ExperimentConfig LoadConfigFile(const std::string &path);

// FNV-1a over the canonical serialization.
std::string ConfigHash(const ExperimentConfig &config);

// Seed present, enums parseable, referenced paths exist where required.
// `need_corpus` demands corpus_dir/list/folding files on disk.
void ValidateConfig(const ExperimentConfig &config, bool need_corpus);

// "wave_dct" -> FeatureBasis::kWaveDct, etc.
FeatureBasis BasisFromConfigName(const std::string &name);

}  // namespace waveclass

#endif  // WAVECLASS_CLI_CONFIG_H_
