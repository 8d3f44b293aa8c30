// corpus/synthetic.h

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

#ifndef WAVECLASS_CORPUS_SYNTHETIC_H_
#define WAVECLASS_CORPUS_SYNTHETIC_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corpus/class-map.h"
#include "corpus/manifest.h"
#include "frontend/wave-io.h"

namespace waveclass {

// Harmonic-plus-noise phone generator: a stack of harmonics under a
// two-formant envelope with random phases, per-instance pitch and gain
// jitter, plus a shaped noise component.
struct SyntheticClassSpec {
  std::string name;
  double f0_hz = 150.0;
  double formant1_hz = 600.0;
  double formant2_hz = 1800.0;
  double bandwidth_hz = 220.0;
  double noise_level = 0.08;   // relative to the harmonic part
  bool fricative = false;      // mostly high-passed noise instead of harmonics
};

struct SyntheticCorpusOptions {
  std::vector<SyntheticClassSpec> classes;  // empty -> six defaults
  int train_sentences = 40;
  int test_sentences = 20;
  int phones_per_sentence = 8;
  double rate = 16000.0;
  int min_phone_samples = 800;    // 50 ms
  int max_phone_samples = 2400;   // 150 ms
  int min_gap_samples = 400;
  int max_gap_samples = 1200;
  double f0_jitter = 0.04;        // relative, per instance
  double gain_jitter_db = 6.0;    // per instance
  double floor_level = 1e-3;      // recording-noise floor
  bool label_gaps_as_sil = true;
  uint64_t seed = 1;
};

std::vector<SyntheticClassSpec> DefaultSyntheticClasses();

struct SyntheticCorpus {
  std::vector<LabeledSentence> train_labels;
  std::vector<LabeledSentence> test_labels;
  std::map<std::string, SentenceWaveform> train_waves;  // normalized
  std::map<std::string, SentenceWaveform> test_waves;
  ClassMap class_map;  // identity over the class names (+ sil)
};

SyntheticCorpus MakeSyntheticCorpus(const SyntheticCorpusOptions &options);

// Writes <id>.wav / <id>.phn files, identity folding tables and the
// train/test list files into the directory (which must exist).
void WriteSyntheticCorpus(const SyntheticCorpus &corpus,
                          const std::string &dir);

}  // namespace waveclass

#endif  // WAVECLASS_CORPUS_SYNTHETIC_H_
