// cli/commands.cc

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

#include "cli/commands.h"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "base/error.h"
#include "base/text-io.h"
#include "classifier/alpha-fit.h"
#include "cli/config.h"
#include "corpus/synthetic.h"
#include "eval/experiment.h"
#include "eval/report.h"
#include "frontend/external-features.h"

namespace waveclass {

namespace {

namespace fs = std::filesystem;

struct CommonFlags {
  std::string config_path;
  std::optional<std::string> seed, snr, policy, basis, frames, sectors,
      components, out, rule, noise, experiment;
};

void AddCommonFlags(CLI::App *cmd, CommonFlags *flags) {
  cmd->add_option("--config", flags->config_path, "configuration file");
  cmd->add_option("--seed", flags->seed, "master seed (overrides config)");
  cmd->add_option("--snr", flags->snr, "condition, e.g. 12, -6 or quiet");
  cmd->add_option("--policy", flags->policy, "adapt|cmvn|matched|none");
  cmd->add_option("--basis", flags->basis,
                  "wave_dct|mfcc|mfcc_deltas|external");
  cmd->add_option("--frames", flags->frames, "frame counts, e.g. 5,7,9");
  cmd->add_option("--sectors", flags->sectors, "subset of ABCDE");
  cmd->add_option("--components", flags->components, "e.g. 1,2,4,8");
  cmd->add_option("--out", flags->out, "output directory");
  cmd->add_option("--rule", flags->rule, "prediction rule: T, R, M:f, S:f");
  cmd->add_option("--noise", flags->noise, "'white' or a noise sample file");
  cmd->add_option("--experiment", flags->experiment, "experiment name");
}

ExperimentConfig ResolveConfig(const CommonFlags &flags) {
  ExperimentConfig config;
  if (!flags.config_path.empty()) config = LoadConfigFile(flags.config_path);
  auto apply = [&](const char *key, const std::optional<std::string> &v) {
    if (v) ApplyConfigValue(&config, key, *v);
  };
  apply("seed", flags.seed);
  apply("policy", flags.policy);
  apply("basis", flags.basis);
  apply("frames", flags.frames);
  apply("sectors", flags.sectors);
  apply("components", flags.components);
  apply("out", flags.out);
  apply("rule", flags.rule);
  apply("noise", flags.noise);
  apply("experiment", flags.experiment);
  return config;
}

std::string ExperimentDir(const ExperimentConfig &config) {
  return config.out + "/" + config.experiment;
}

std::string CacheDir(const ExperimentConfig &config) {
  const char *env = std::getenv("WAVECLASS_CACHE_DIR");
  if (env && *env) return env;
  return ExperimentDir(config) + "/cache";
}

std::vector<std::string> ReadList(const ExperimentConfig &config,
                                  const std::string &list_name) {
  std::vector<std::string> ids;
  for (const auto &line :
       ReadFileLines(config.corpus_dir + "/" + list_name)) {
    auto tokens = SplitTokens(line);
    if (!tokens.empty()) ids.push_back(tokens[0]);
  }
  return ids;
}

SentenceWaveform LoadSentence(const ExperimentConfig &config,
                              const std::string &sid) {
  std::string wav = config.corpus_dir + "/" + sid + ".wav";
  std::string raw = config.corpus_dir + "/" + sid + ".raw";
  SentenceWaveform wave =
      fs::exists(wav) ? ReadWaveFile(wav) : ReadWaveFile(raw);
  wave.sentence_id = sid;
  return Normalized(wave);
}

ClassMap LoadMap(const ExperimentConfig &config) {
  std::string fold48 = config.fold48.empty()
                           ? config.corpus_dir + "/fold48.txt"
                           : config.fold48;
  std::string fold39 = config.fold39.empty()
                           ? config.corpus_dir + "/fold39.txt"
                           : config.fold39;
  return ClassMap::LoadFromFiles(fold48, fold39);
}

std::shared_ptr<NoiseSource> MakeNoise(const ExperimentConfig &config) {
  if (config.noise == "white") return std::make_shared<WhiteNoiseSource>();
  return FileNoiseSource::FromFile(config.noise);
}

PipelineConfig MakePipelineConfig(const ExperimentConfig &config) {
  PipelineConfig pc;
  pc.basis = BasisFromConfigName(config.basis);
  pc.dct_block = config.dct_block;
  pc.cmvn = config.cmvn == "off"
                ? CmvnMode::kOff
                : (config.cmvn == "sentence" ? CmvnMode::kSentence
                                             : CmvnMode::kTrainset);
  pc.sectors.assign(config.sectors.begin(), config.sectors.end());
  pc.frame_counts = config.frames;
  pc.component_counts = config.components;
  pc.posterior_weights = config.posterior_weights;
  pc.seed = config.seed;
  pc.workers = config.workers;
  pc.config_hash = ConfigHash(config);
  pc.external_dir = config.external_dir;
  pc.cache_dir = CacheDir(config);
  return pc;
}

std::vector<SnrCondition> GridConditions(const ExperimentConfig &config) {
  std::vector<SnrCondition> conditions;
  for (const auto &token : config.snr_grid)
    conditions.push_back(ParseCondition(token));
  return conditions;
}

ExperimentData LoadData(const ExperimentConfig &config) {
  ExperimentData data;
  data.class_map = LoadMap(config);
  std::string dir = ExperimentDir(config);
  data.train_manifest = LoadManifest(dir + "/manifest-train.txt");
  data.test_manifest = LoadManifest(dir + "/manifest-test.txt");
  for (const auto &sid : ReadList(config, config.train_list))
    data.train_waves[sid] = LoadSentence(config, sid);
  for (const auto &sid : ReadList(config, config.test_list))
    data.test_waves[sid] = LoadSentence(config, sid);
  data.noise = MakeNoise(config);
  return data;
}

std::string QuietBankPath(const ExperimentConfig &config) {
  return ExperimentDir(config) + "/bank-" + config.basis + ".mdl";
}

int CmdSynth(const ExperimentConfig &config, std::ostream &out) {
  ValidateConfig(config, /*need_corpus=*/false);
  if (config.corpus_dir.empty())
    throw ConfigError("synth: corpus_dir must be set");
  fs::create_directories(config.corpus_dir);
  SyntheticCorpusOptions options;
  options.train_sentences = config.synth_train_sentences;
  options.test_sentences = config.synth_test_sentences;
  options.phones_per_sentence = config.synth_phones_per_sentence;
  options.seed = config.seed;
  SyntheticCorpus corpus = MakeSyntheticCorpus(options);
  WriteSyntheticCorpus(corpus, config.corpus_dir);
  WriteFile(config.corpus_dir + "/provenance.txt",
            "config_hash " + ConfigHash(config) + " seed " +
                std::to_string(config.seed) + "\n");
  out << "synth: wrote " << corpus.train_labels.size() << " train and "
      << corpus.test_labels.size() << " test sentences to "
      << config.corpus_dir << "\n";
  return 0;
}

int CmdIngest(const ExperimentConfig &config, std::ostream &out,
              std::ostream &err) {
  ValidateConfig(config, /*need_corpus=*/true);
  ClassMap map = LoadMap(config);
  std::string hash = ConfigHash(config);

  auto build = [&](const std::string &list,
                   const std::string &split) -> CorpusManifest {
    std::vector<LabeledSentence> sentences;
    for (const auto &sid : ReadList(config, list)) {
      LabeledSentence s;
      s.sentence_id = sid;
      s.intervals = LoadPhnLabels(config.corpus_dir + "/" + sid + ".phn");
      s.num_samples = LoadSentence(config, sid).NumSamples();
      sentences.push_back(std::move(s));
    }
    CorpusManifest manifest = ExtractInstances(sentences, map, split, &err);
    manifest.config_hash = hash;
    manifest.seed = config.seed;
    return manifest;
  };

  CorpusManifest train = build(config.train_list, "train");
  int64_t before = static_cast<int64_t>(train.instances.size());
  train = AugmentSmallClasses(train, config.augment_threshold, config.shifts,
                              &err);
  CorpusManifest test = build(config.test_list, "test");

  std::string dir = ExperimentDir(config);
  fs::create_directories(dir);
  SaveManifest(train, dir + "/manifest-train.txt");
  SaveManifest(test, dir + "/manifest-test.txt");
  WriteFile(dir + "/duration-stats.txt",
            FormatDurationStats(GroupDurationStats(train)));
  out << "ingest: " << before << " train instances ("
      << train.instances.size() << " after augmentation), "
      << test.instances.size() << " test instances\n";
  return 0;
}

int CmdFeatures(const ExperimentConfig &config, const std::string &split,
                const std::string &snr, std::ostream &out) {
  ValidateConfig(config, /*need_corpus=*/true);
  ExperimentData data = LoadData(config);
  Experiment experiment(std::move(data), MakePipelineConfig(config));
  SnrCondition condition = ParseCondition(snr);
  auto features = experiment.ComputeFeatures(split, condition);
  std::string dir = CacheDir(config);
  fs::create_directories(dir);
  std::string provenance = "config_hash=" + ConfigHash(config) +
                           " seed=" + std::to_string(config.seed);
  for (const auto &[sid, m] : features) {
    std::string path = dir + "/" + sid + "." + config.basis + "." +
                       condition.Name() + "." + split + ".feat";
    WriteFeatureFile(path, m, provenance);
  }
  out << "features: wrote " << features.size() << " matrices to " << dir
      << "\n";
  return 0;
}

int CmdTrain(const ExperimentConfig &config, const std::string &snr,
             std::ostream &out) {
  ValidateConfig(config, /*need_corpus=*/true);
  Experiment experiment(LoadData(config), MakePipelineConfig(config));
  SnrCondition condition = ParseCondition(snr);
  ModelBank bank = experiment.TrainBank(condition);
  std::string path = condition.quiet
                         ? QuietBankPath(config)
                         : ExperimentDir(config) + "/bank-" + config.basis +
                               "-" + condition.Name() + ".mdl";
  fs::create_directories(ExperimentDir(config));
  SaveModelBank(bank, path);
  out << "train: " << bank.models.size() << " models -> " << path << "\n";
  return 0;
}

int CmdAdapt(const ExperimentConfig &config, const std::string &snr,
             const std::string &bank_path, std::ostream &out) {
  ValidateConfig(config, /*need_corpus=*/false);
  SnrCondition condition = ParseCondition(snr);
  std::string in_path = bank_path.empty() ? QuietBankPath(config) : bank_path;
  ModelBank bank = LoadModelBank(in_path);

  NoiseSpec frame_noise;
  if (config.noise == "white") {
    frame_noise =
        WhiteNoiseSpec(bank.frame_dim, condition.Sigma2(), bank.basis);
  } else {
    auto source = FileNoiseSource::FromFile(config.noise);
    frame_noise = NoiseSpecForDim(
        EstimateNoiseCovDiag(source->samples(), bank.frame_dim),
        bank.frame_dim, condition.Sigma2(), bank.basis, source->Id());
  }
  ModelBank adapted = AdaptBank(bank, frame_noise);
  std::string path = in_path + "." + condition.Name() + ".adapted";
  SaveModelBank(adapted, path);
  out << "adapt: sigma2=" << condition.Sigma2() << " -> " << path << "\n";
  return 0;
}

void WriteEvalArtifacts(const ExperimentConfig &config,
                        const Experiment::EvalResult &result, bool dump_scores,
                        std::ostream &out) {
  std::string cond_dir =
      ExperimentDir(config) + "/" + result.report.condition;
  fs::create_directories(cond_dir);
  WriteReportFiles(result.report, cond_dir + "/" + result.report.rule);
  if (dump_scores)
    SaveScoreDump(result.dump, cond_dir + "/" + result.report.rule + ".scores");
  out << "classify: condition " << result.report.condition << " rule "
      << result.report.rule << " error " << result.report.error_rate << "\n";
}

int CmdClassify(const ExperimentConfig &config, const std::string &snr,
                const std::string &bank_path, bool dump_scores,
                std::ostream &out) {
  ValidateConfig(config, /*need_corpus=*/true);
  Experiment experiment(LoadData(config), MakePipelineConfig(config));
  ModelBank bank =
      LoadModelBank(bank_path.empty() ? QuietBankPath(config) : bank_path);
  auto result =
      experiment.Evaluate(bank, ParseCondition(snr),
                          PolicyFromName(config.policy), ParseRule(config.rule));
  WriteEvalArtifacts(config, result, dump_scores, out);
  return 0;
}

int CmdSweep(const ExperimentConfig &config, const std::string &bank_path,
             bool dump_scores, std::ostream &out) {
  ValidateConfig(config, /*need_corpus=*/true);
  Experiment experiment(LoadData(config), MakePipelineConfig(config));
  ModelBank bank =
      LoadModelBank(bank_path.empty() ? QuietBankPath(config) : bank_path);
  Rule rule = ParseRule(config.rule);
  AdaptationPolicy policy = PolicyFromName(config.policy);

  std::vector<SummaryRow> rows;
  for (const SnrCondition &condition : GridConditions(config)) {
    auto result = experiment.Evaluate(bank, condition, policy, rule);
    WriteEvalArtifacts(config, result, dump_scores, out);
    rows.push_back({config.basis + "/" + config.policy + "/" + rule.Name(),
                    condition.Name(), result.report.error_rate});
  }
  WriteSummary(rows, ExperimentDir(config) + "/summary", ConfigHash(config),
               config.seed);
  out << "sweep: " << rows.size() << " conditions -> "
      << ExperimentDir(config) + "/summary.txt" << "\n";
  return 0;
}

int CmdFitAlpha(const ExperimentConfig &config, const std::string &cep_dir,
                const std::string &wave_dir, std::ostream &out) {
  ValidateConfig(config, /*need_corpus=*/false);
  if (cep_dir.empty() || wave_dir.empty())
    throw ConfigError("fit-alpha: --cep-dir and --wave-dir are required");
  ClassMap map = LoadMap(config);
  CorpusManifest train = LoadManifest(cep_dir + "/manifest-train.txt");
  Rule rule = ParseRule(config.rule);

  std::vector<ScoreDump> cep, wave;
  for (const auto &token : config.snr_grid) {
    SnrCondition condition = ParseCondition(token);
    cep.push_back(LoadScoreDump(cep_dir + "/" + condition.Name() + "/" +
                                rule.Name() + ".scores"));
    wave.push_back(LoadScoreDump(wave_dir + "/" + condition.Name() + "/" +
                                 rule.Name() + ".scores"));
  }
  AlphaFitOptions options;
  options.units = AlphaUnitsFromName(config.alpha_units);
  options.mode = config.combine_mode == "dim_normalized"
                     ? CombineMode::kDimNormalized
                     : CombineMode::kRaw;
  options.d_cep = config.d_cep;
  options.d_wave = config.d_wave;
  AlphaFitResult result = FitAlphaSchedule(cep, wave, train.priors, map,
                                           options);
  std::string dir = ExperimentDir(config);
  fs::create_directories(dir);
  SaveSchedule(result, dir + "/alpha-schedule.txt", ConfigHash(config),
               config.seed);
  out << "fit-alpha: midpoint " << result.schedule.midpoint << " beta "
      << result.schedule.beta << " (" << AlphaUnitsName(result.schedule.units)
      << ") -> " << dir + "/alpha-schedule.txt" << "\n";
  return 0;
}

int CmdReport(const ExperimentConfig &config, std::ostream &out) {
  ValidateConfig(config, /*need_corpus=*/false);
  std::string dir = ExperimentDir(config);
  std::vector<SummaryRow> rows;
  for (const auto &cond_entry : fs::directory_iterator(dir)) {
    if (!cond_entry.is_directory()) continue;
    for (const auto &entry : fs::directory_iterator(cond_entry.path())) {
      std::string name = entry.path().filename().string();
      if (name.size() < 12 ||
          name.substr(name.size() - 12) != ".report.json")
        continue;
      EvaluationReport report = LoadReportJson(entry.path().string());
      auto note_field = [&](const std::string &key) -> std::string {
        auto pos = report.notes.find(key + "=");
        if (pos == std::string::npos) return "";
        auto start = pos + key.size() + 1;
        auto end = report.notes.find(' ', start);
        return report.notes.substr(start, end == std::string::npos
                                              ? std::string::npos
                                              : end - start);
      };
      std::string basis = note_field("basis");
      for (char &c : basis) c = static_cast<char>(std::tolower(c));
      std::string method = basis.empty() ? report.rule
                                         : basis + "/" + note_field("policy") +
                                               "/" + report.rule;
      rows.push_back({method, report.condition, report.error_rate});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
    return std::tie(a.method, a.condition) < std::tie(b.method, b.condition);
  });
  WriteSummary(rows, dir + "/summary", ConfigHash(config), config.seed);
  out << "report: " << rows.size() << " result rows -> " << dir
      << "/summary.txt\n";
  return 0;
}

}  // namespace

int RunCommand(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"phoneme classification in linear feature domains"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string split = "train";
  std::string snr = "quiet";
  std::string bank_path, cep_dir, wave_dir;
  bool dump_scores = false;

  CLI::App *synth = app.add_subcommand("synth", "generate a synthetic corpus");
  AddCommonFlags(synth, &flags);
  CLI::App *ingest = app.add_subcommand("ingest", "build corpus manifests");
  AddCommonFlags(ingest, &flags);
  CLI::App *features =
      app.add_subcommand("features", "precompute and cache features");
  AddCommonFlags(features, &flags);
  features->add_option("--split", split, "train|test");
  CLI::App *train = app.add_subcommand("train", "train a model bank");
  AddCommonFlags(train, &flags);
  CLI::App *adapt = app.add_subcommand("adapt", "adapt a bank to noise");
  AddCommonFlags(adapt, &flags);
  adapt->add_option("--bank", bank_path, "model bank path");
  CLI::App *classify =
      app.add_subcommand("classify", "evaluate one condition");
  AddCommonFlags(classify, &flags);
  classify->add_option("--bank", bank_path, "model bank path");
  classify->add_flag("--dump-scores", dump_scores, "write per-instance scores");
  CLI::App *sweep = app.add_subcommand("sweep", "evaluate the SNR grid");
  AddCommonFlags(sweep, &flags);
  sweep->add_option("--bank", bank_path, "model bank path");
  sweep->add_flag("--dump-scores", dump_scores, "write per-instance scores");
  CLI::App *fit_alpha =
      app.add_subcommand("fit-alpha", "fit the combination schedule");
  AddCommonFlags(fit_alpha, &flags);
  fit_alpha->add_option("--cep-dir", cep_dir, "cepstral experiment directory");
  fit_alpha->add_option("--wave-dir", wave_dir, "waveform experiment directory");
  CLI::App *report = app.add_subcommand("report", "aggregate reports");
  AddCommonFlags(report, &flags);

  std::vector<const char *> argv;
  argv.push_back("waveclass");
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    ExperimentConfig config = ResolveConfig(flags);
    if (synth->parsed()) return CmdSynth(config, out);
    if (ingest->parsed()) return CmdIngest(config, out, err);
    if (features->parsed()) {
      return CmdFeatures(config, split, flags.snr.value_or("quiet"), out);
    }
    if (train->parsed())
      return CmdTrain(config, flags.snr.value_or("quiet"), out);
    if (adapt->parsed())
      return CmdAdapt(config, flags.snr.value_or("quiet"), bank_path, out);
    if (classify->parsed())
      return CmdClassify(config, flags.snr.value_or("quiet"), bank_path,
                         dump_scores, out);
    if (sweep->parsed()) return CmdSweep(config, bank_path, dump_scores, out);
    if (fit_alpha->parsed()) return CmdFitAlpha(config, cep_dir, wave_dir, out);
    if (report->parsed()) return CmdReport(config, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace waveclass
