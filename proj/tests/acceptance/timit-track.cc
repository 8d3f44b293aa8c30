// tests/acceptance/timit-track.cc

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

#include "timit-track.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "corpus/class-map.h"
#include "corpus/manifest.h"
#include "corpus/phn.h"
#include "eval/experiment.h"
#include "frontend/wave-io.h"

namespace waveclass {

namespace {

namespace fs = std::filesystem;

std::string Lower(std::string s) {
  for (char &c : s) c = static_cast<char>(std::tolower(c));
  return s;
}

// SI/SX sentences of one TIMIT half, as (sentence id, wav path, phn path).
struct TimitEntry {
  std::string sid;
  std::string wav;
  std::string phn;
};

std::vector<TimitEntry> ScanTimit(const std::string &root,
                                  const std::string &split) {
  std::vector<TimitEntry> entries;
  fs::path base;
  for (const char *candidate : {split.c_str(), Lower(split).c_str()}) {
    if (fs::is_directory(fs::path(root) / candidate)) {
      base = fs::path(root) / candidate;
      break;
    }
  }
  if (base.empty())
    throw std::runtime_error("TIMIT split directory not found under " + root);
  for (const auto &entry : fs::recursive_directory_iterator(base)) {
    if (!entry.is_regular_file()) continue;
    std::string name = Lower(entry.path().filename().string());
    if (name.size() < 5) continue;
    bool wav = name.substr(name.size() - 4) == ".wav";
    if (!wav) continue;
    if (name.rfind("si", 0) != 0 && name.rfind("sx", 0) != 0) continue;
    fs::path phn = entry.path();
    phn.replace_extension(".phn");
    if (!fs::exists(phn)) {
      phn = entry.path();
      phn.replace_extension(".PHN");
      if (!fs::exists(phn)) continue;
    }
    std::string speaker = Lower(entry.path().parent_path().filename().string());
    std::string stem = name.substr(0, name.size() - 4);
    entries.push_back({speaker + "_" + stem, entry.path().string(),
                       phn.string()});
  }
  std::sort(entries.begin(), entries.end(),
            [](const TimitEntry &a, const TimitEntry &b) { return a.sid < b.sid; });
  return entries;
}

CorpusManifest BuildManifest(const std::vector<TimitEntry> &entries,
                             const ClassMap &map, const std::string &split) {
  std::vector<LabeledSentence> sentences;
  sentences.reserve(entries.size());
  for (const auto &entry : entries) {
    LabeledSentence s;
    s.sentence_id = entry.sid;
    s.intervals = LoadPhnLabels(entry.phn);
    s.num_samples = ReadWaveFile(entry.wav).NumSamples();
    sentences.push_back(std::move(s));
  }
  return ExtractInstances(sentences, map, split, &std::cerr);
}

// The external feature path never touches audio samples, so the experiment
// only needs sentence ids and rates.
std::map<std::string, SentenceWaveform> StubWaves(
    const std::vector<TimitEntry> &entries) {
  std::map<std::string, SentenceWaveform> waves;
  for (const auto &entry : entries) {
    SentenceWaveform w;
    w.sentence_id = entry.sid;
    w.rate = 16000.0;
    waves[entry.sid] = std::move(w);
  }
  return waves;
}

double EvaluateRule(Experiment *experiment, const ModelBank &bank,
                    const Rule &rule) {
  return experiment
      ->Evaluate(bank, SnrCondition::Quiet(), AdaptationPolicy::kNone, rule)
      .report.error_rate;
}

// Bank restricted to a single component count, for the single-best baseline.
ModelBank SingleComponentView(const ModelBank &bank, int c) {
  ModelBank view = bank;
  view.component_counts = {c};
  view.component_weights = {1.0};
  view.slice_weights.clear();
  for (auto it = view.models.begin(); it != view.models.end();) {
    if (std::get<3>(it->first) != c) it = view.models.erase(it);
    else ++it;
  }
  return view;
}

}  // namespace

std::string RunTimitTrack(const std::string &data_dir) {
  const char *timit = std::getenv("TIMIT_ROOT");
  const char *plp = std::getenv("WAVECLASS_PLP_DIR");
  if (!timit || !*timit || !plp || !*plp)
    throw std::string(
        "set TIMIT_ROOT and WAVECLASS_PLP_DIR to run the reproduction track");

  ClassMap map = ClassMap::LoadFromFiles(data_dir + "/timit-fold48.txt",
                                         data_dir + "/timit-fold39.txt");
  std::vector<TimitEntry> train_entries = ScanTimit(timit, "train");
  std::vector<TimitEntry> test_entries = ScanTimit(timit, "test");
  if (train_entries.empty() || test_entries.empty())
    throw std::runtime_error("no SI/SX sentences found under TIMIT_ROOT");
  std::cerr << "timit-track: " << train_entries.size() << " train / "
            << test_entries.size() << " test sentences\n";

  ExperimentData data;
  data.class_map = map;
  data.train_manifest = BuildManifest(train_entries, map, "train");
  data.train_manifest = AugmentSmallClasses(
      data.train_manifest, 1500, {-100, -75, -50, -25, 25, 50, 75, 100},
      &std::cerr);
  data.test_manifest = BuildManifest(test_entries, map, "test");
  data.train_waves = StubWaves(train_entries);
  data.test_waves = StubWaves(test_entries);
  data.noise = std::make_shared<WhiteNoiseSource>();

  PipelineConfig config;
  config.basis = FeatureBasis::kExternal;
  config.external_dir = plp;
  config.cmvn = CmvnMode::kTrainset;
  config.sectors = {'A', 'B', 'C', 'D', 'E'};
  config.frame_counts = {7, 9, 11, 13, 15};
  config.component_counts = {1, 2, 4, 8, 16, 32, 64};
  config.seed = 1;
  config.workers = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  config.config_hash = "timit-track";

  Experiment experiment(data, config);
  std::cerr << "timit-track: training the bank (this takes a while)\n";
  ModelBank bank = experiment.TrainBank(SnrCondition::Quiet());

  double err_t = EvaluateRule(&experiment, bank, ParseRule("T"));
  double err_r = EvaluateRule(&experiment, bank, ParseRule("R"));
  double err_s = 1.0, err_m = 1.0;
  for (int f : config.frame_counts) {
    err_s = std::min(err_s,
                     EvaluateRule(&experiment, bank, ParseRule("S:" + std::to_string(f))));
    for (int c : config.component_counts) {
      ModelBank view = SingleComponentView(bank, c);
      err_m = std::min(err_m, EvaluateRule(&experiment, view,
                                           ParseRule("M:" + std::to_string(f))));
    }
  }

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "quiet errors: T %.4f, S(best f) %.4f, R %.4f, M(best f,c) %.4f",
                err_t, err_s, err_r, err_m);
  std::string summary = buf;
  if (std::abs(err_t - 0.185) > 0.015)
    throw std::runtime_error(summary +
                             "; T not within +-1.5 points of 18.5%");
  // Reduction ordering: sector sum beats the f-average alone, the
  // combination is best.
  if (!(err_s < err_r && err_t < err_s))
    throw std::runtime_error(summary + "; reduction ordering violated");
  return summary;
}

}  // namespace waveclass
