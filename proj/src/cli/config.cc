// cli/config.cc

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

#include "cli/config.h"

#include <filesystem>
#include <sstream>

#include "base/error.h"
#include "base/text-io.h"
#include "classifier/combine.h"
#include "classifier/rules.h"
#include "eval/experiment.h"
#include "frontend/noise.h"

namespace waveclass {

namespace {

std::vector<int> ParseIntList(const std::string &value, const std::string &key) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ','))
    if (!item.empty())
      out.push_back(static_cast<int>(ParseInt(item, "config key " + key)));
  return out;
}

std::vector<int64_t> ParseInt64List(const std::string &value,
                                    const std::string &key) {
  std::vector<int64_t> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(ParseInt(item, "config key " + key));
  return out;
}

std::vector<std::string> ParseStringList(const std::string &value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string JoinInts(const std::vector<int> &v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::string JoinInt64s(const std::vector<int64_t> &v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::string JoinStrings(const std::vector<std::string> &v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

bool ParseBool(const std::string &value, const std::string &key) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw ConfigError("config key " + key + ": expected a boolean, got '" +
                    value + "'");
}

}  // namespace

std::map<std::string, std::string> ExperimentConfig::Canonical() const {
  std::map<std::string, std::string> kv;
  kv["corpus_dir"] = corpus_dir;
  kv["train_list"] = train_list;
  kv["test_list"] = test_list;
  kv["fold48"] = fold48;
  kv["fold39"] = fold39;
  kv["noise"] = noise;
  kv["out"] = out;
  kv["external_dir"] = external_dir;
  kv["experiment"] = experiment;
  kv["basis"] = basis;
  kv["dct_block"] = std::to_string(dct_block);
  kv["cmvn"] = cmvn;
  kv["frames"] = JoinInts(frames);
  kv["sectors"] = sectors;
  kv["components"] = JoinInts(components);
  kv["posterior_weights"] = posterior_weights ? "1" : "0";
  kv["rule"] = rule;
  kv["augment_threshold"] = std::to_string(augment_threshold);
  kv["shifts"] = JoinInt64s(shifts);
  kv["snr_grid"] = JoinStrings(snr_grid);
  kv["policy"] = policy;
  kv["alpha_units"] = alpha_units;
  kv["combine_mode"] = combine_mode;
  kv["d_cep"] = FormatDouble(d_cep);
  kv["d_wave"] = FormatDouble(d_wave);
  kv["synth_train_sentences"] = std::to_string(synth_train_sentences);
  kv["synth_test_sentences"] = std::to_string(synth_test_sentences);
  kv["synth_phones_per_sentence"] = std::to_string(synth_phones_per_sentence);
  kv["seed"] = std::to_string(seed);
  kv["workers"] = std::to_string(workers);
  return kv;
}

void ApplyConfigValue(ExperimentConfig *config, const std::string &key,
                      const std::string &value) {
  if (key == "corpus_dir") config->corpus_dir = value;
  else if (key == "train_list") config->train_list = value;
  else if (key == "test_list") config->test_list = value;
  else if (key == "fold48") config->fold48 = value;
  else if (key == "fold39") config->fold39 = value;
  else if (key == "noise") config->noise = value;
  else if (key == "out") config->out = value;
  else if (key == "external_dir") config->external_dir = value;
  else if (key == "experiment") config->experiment = value;
  else if (key == "basis") config->basis = value;
  else if (key == "dct_block")
    config->dct_block = static_cast<int>(ParseInt(value, "config key dct_block"));
  else if (key == "cmvn") config->cmvn = value;
  else if (key == "frames") config->frames = ParseIntList(value, key);
  else if (key == "sectors") config->sectors = value;
  else if (key == "components") config->components = ParseIntList(value, key);
  else if (key == "posterior_weights")
    config->posterior_weights = ParseBool(value, key);
  else if (key == "rule") config->rule = value;
  else if (key == "augment_threshold")
    config->augment_threshold = ParseInt(value, "config key augment_threshold");
  else if (key == "shifts") config->shifts = ParseInt64List(value, key);
  else if (key == "snr_grid") config->snr_grid = ParseStringList(value);
  else if (key == "policy") config->policy = value;
  else if (key == "alpha_units") config->alpha_units = value;
  else if (key == "combine_mode") config->combine_mode = value;
  else if (key == "d_cep") config->d_cep = ParseDouble(value, "config key d_cep");
  else if (key == "d_wave")
    config->d_wave = ParseDouble(value, "config key d_wave");
  else if (key == "synth_train_sentences")
    config->synth_train_sentences =
        static_cast<int>(ParseInt(value, "config key synth_train_sentences"));
  else if (key == "synth_test_sentences")
    config->synth_test_sentences =
        static_cast<int>(ParseInt(value, "config key synth_test_sentences"));
  else if (key == "synth_phones_per_sentence")
    config->synth_phones_per_sentence = static_cast<int>(
        ParseInt(value, "config key synth_phones_per_sentence"));
  else if (key == "seed") {
    config->seed = static_cast<uint64_t>(ParseInt(value, "config key seed"));
    config->seed_set = true;
  } else if (key == "workers")
    config->workers = static_cast<int>(ParseInt(value, "config key workers"));
  else
    throw ConfigError("unknown config key: " + key);
}

namespace {

void LoadInto(ExperimentConfig *config, const std::string &path, int depth) {
  if (depth > 8) throw ConfigError("config include depth exceeded at " + path);
  std::vector<std::string> lines = ReadFileLines(path);
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    std::string context = path + ":" + std::to_string(i + 1);
    if (eq == std::string::npos) {
      auto tokens = SplitTokens(line);
      if (tokens.empty()) continue;
      if (tokens.size() == 2 && tokens[0] == "include") {
        LoadInto(config, (base / tokens[1]).string(), depth + 1);
        continue;
      }
      throw ParseError("expected 'key = value' (" + context + ")");
    }
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("empty config key (" + context + ")");
    if (key == "include") {
      LoadInto(config, (base / value).string(), depth + 1);
      continue;
    }
    ApplyConfigValue(config, key, value);
  }
}

}  // namespace

ExperimentConfig LoadConfigFile(const std::string &path) {
  ExperimentConfig config;
  LoadInto(&config, path, 0);
  return config;
}

std::string ConfigHash(const ExperimentConfig &config) {
  std::ostringstream canon;
  for (const auto &[k, v] : config.Canonical()) canon << k << "=" << v << "\n";
  return ToHex(Fnv1a(canon.str()));
}

FeatureBasis BasisFromConfigName(const std::string &name) {
  if (name == "wave_dct") return FeatureBasis::kWaveDct;
  if (name == "mfcc") return FeatureBasis::kMfcc;
  if (name == "mfcc_deltas") return FeatureBasis::kMfccDeltas;
  if (name == "external") return FeatureBasis::kExternal;
  throw ConfigError("unknown basis: " + name);
}

void ValidateConfig(const ExperimentConfig &config, bool need_corpus) {
  std::vector<std::string> problems;
  if (!config.seed_set)
    problems.push_back("seed: required (no implicit nondeterminism)");
  try {
    BasisFromConfigName(config.basis);
  } catch (const Error &) {
    problems.push_back("basis: unknown value '" + config.basis + "'");
  }
  if (config.cmvn != "trainset" && config.cmvn != "sentence" &&
      config.cmvn != "off")
    problems.push_back("cmvn: expected trainset|sentence|off");
  try {
    PolicyFromName(config.policy);
  } catch (const Error &) {
    problems.push_back("policy: unknown value '" + config.policy + "'");
  }
  try {
    ParseRule(config.rule);
  } catch (const Error &) {
    problems.push_back("rule: unknown value '" + config.rule + "'");
  }
  try {
    AlphaUnitsFromName(config.alpha_units);
  } catch (const Error &) {
    problems.push_back("alpha_units: expected db|linear");
  }
  if (config.combine_mode != "raw" && config.combine_mode != "dim_normalized")
    problems.push_back("combine_mode: expected raw|dim_normalized");
  for (const auto &token : config.snr_grid) {
    try {
      ParseCondition(token);
    } catch (const Error &) {
      problems.push_back("snr_grid: bad condition '" + token + "'");
    }
  }
  if (config.workers < 1) problems.push_back("workers: must be >= 1");
  if (config.dct_block < 1) problems.push_back("dct_block: must be >= 1");
  for (char s : config.sectors)
    if (std::string("ABCDE").find(s) == std::string::npos)
      problems.push_back(std::string("sectors: unknown sector '") + s + "'");
  if (need_corpus) {
    namespace fs = std::filesystem;
    if (config.corpus_dir.empty() || !fs::is_directory(config.corpus_dir))
      problems.push_back("corpus_dir: not a directory: " + config.corpus_dir);
    else {
      for (const std::string &rel : {config.train_list, config.test_list}) {
        if (!fs::exists(fs::path(config.corpus_dir) / rel))
          problems.push_back("corpus list missing: " + rel);
      }
    }
    if (!config.fold48.empty() && !fs::exists(config.fold48))
      problems.push_back("fold48: no such file: " + config.fold48);
    if (!config.fold39.empty() && !fs::exists(config.fold39))
      problems.push_back("fold39: no such file: " + config.fold39);
    if (config.noise != "white" && !fs::exists(config.noise))
      problems.push_back("noise: expected 'white' or a sample file, got " +
                         config.noise);
  }
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid configuration:";
    for (const auto &p : problems) msg << "\n  " << p;
    throw ConfigError(msg.str());
  }
}

}  // namespace waveclass
