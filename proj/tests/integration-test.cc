// tests/integration-test.cc

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
#include <fstream>
#include <sstream>

#include "base/text-io.h"
#include "classifier/alpha-fit.h"
#include "cli/commands.h"
#include "density/model-bank.h"
#include "eval/report.h"

using namespace waveclass;
namespace fs = std::filesystem;

namespace {

struct Workspace {
  fs::path root;
  Workspace() {
    root = fs::temp_directory_path() /
           ("wc-int-" + std::to_string(::getpid()));
    fs::remove_all(root);
    fs::create_directories(root);
  }
  ~Workspace() { fs::remove_all(root); }
  std::string Path(const std::string &rel) const {
    return (root / rel).string();
  }
};

int Run(const std::vector<std::string> &args, std::string *stdout_text = nullptr,
        std::string *stderr_text = nullptr) {
  std::ostringstream out, err;
  int status = RunCommand(args, out, err);
  if (stdout_text) *stdout_text = out.str();
  if (stderr_text) *stderr_text = err.str();
  return status;
}

std::string Slurp(const std::string &path) {
  std::ifstream in(path);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("the CLI pipeline runs end to end on a synthetic corpus") {
  Workspace ws;
  std::string config = ws.Path("run.cfg");
  WriteFile(config,
            "seed = 21\n"
            "corpus_dir = " + ws.Path("corpus") + "\n"
            "out = " + ws.Path("out") + "\n"
            "experiment = wavec\n"
            "basis = wave_dct\n"
            "sectors = C\n"
            "frames = 3\n"
            "components = 1,2\n"
            "augment_threshold = 12\n"
            "shifts = -80,80\n"
            "snr_grid = quiet,0\n"
            "policy = adapt\n"
            "synth_train_sentences = 10\n"
            "synth_test_sentences = 5\n"
            "synth_phones_per_sentence = 8\n"
            "workers = 2\n");

  std::string out_text, err_text;
  REQUIRE(Run({"synth", "--config", config}, &out_text, &err_text) == 0);
  CHECK(fs::exists(ws.Path("corpus/tr0000.wav")));
  CHECK(fs::exists(ws.Path("corpus/tr0000.phn")));
  CHECK(fs::exists(ws.Path("corpus/fold48.txt")));

  REQUIRE(Run({"ingest", "--config", config}, &out_text, &err_text) == 0);
  std::string manifest_path = ws.Path("out/wavec/manifest-train.txt");
  REQUIRE(fs::exists(manifest_path));
  std::string first = Slurp(manifest_path);
  // Idempotent: a second run reproduces the artifact byte for byte.
  REQUIRE(Run({"ingest", "--config", config}) == 0);
  CHECK(Slurp(manifest_path) == first);
  // Artifacts embed the config hash and seed.
  CHECK(first.find("config_hash") != std::string::npos);
  CHECK(first.find("seed 21") != std::string::npos);

  REQUIRE(Run({"features", "--config", config, "--split", "test", "--snr",
               "0"}, &out_text) == 0);
  CHECK(fs::exists(ws.Path("out/wavec/cache/te0000.wave_dct.snr+00db.test.feat")));
  CHECK(Slurp(ws.Path("out/wavec/cache/te0000.wave_dct.snr+00db.test.feat"))
            .find("config_hash=") != std::string::npos);

  REQUIRE(Run({"train", "--config", config}, &out_text) == 0);
  std::string bank_path = ws.Path("out/wavec/bank-wave_dct.mdl");
  REQUIRE(fs::exists(bank_path));
  ModelBank bank = LoadModelBank(bank_path);
  CHECK(bank.basis == "WAVE_DCT");
  CHECK(bank.zero_mean);
  CHECK(!bank.config_hash.empty());

  REQUIRE(Run({"adapt", "--config", config, "--snr", "0"}, &out_text) == 0);
  ModelBank adapted = LoadModelBank(bank_path + ".snr+00db.adapted");
  CHECK(adapted.adapted);
  CHECK(adapted.sigma2 == doctest::Approx(1.0));

  REQUIRE(Run({"sweep", "--config", config, "--dump-scores"}, &out_text) == 0);
  CHECK(fs::exists(ws.Path("out/wavec/quiet/T.report")));
  CHECK(fs::exists(ws.Path("out/wavec/snr+00db/T.report.json")));
  CHECK(fs::exists(ws.Path("out/wavec/snr+00db/T.scores")));
  CHECK(fs::exists(ws.Path("out/wavec/summary.txt")));
  EvaluationReport report =
      LoadReportJson(ws.Path("out/wavec/quiet/T.report.json"));
  CHECK(report.error_rate >= 0.0);
  CHECK(report.error_rate <= 1.0);
  CHECK(!report.config_hash.empty());

  // Cepstral stream of the same corpus, adapted by CMVN.
  std::string cep_config = ws.Path("cep.cfg");
  WriteFile(cep_config, Slurp(config) +
                            "experiment = cep\n"
                            "basis = mfcc_deltas\n"
                            "policy = cmvn\n");
  REQUIRE(Run({"ingest", "--config", cep_config}) == 0);
  REQUIRE(Run({"train", "--config", cep_config}) == 0);
  REQUIRE(Run({"sweep", "--config", cep_config, "--dump-scores"}) == 0);
  CHECK(fs::exists(ws.Path("out/cep/snr+00db/T.scores")));

  REQUIRE(Run({"fit-alpha", "--config", config, "--cep-dir", ws.Path("out/cep"),
               "--wave-dir", ws.Path("out/wavec")}, &out_text) == 0);
  std::string schedule_path = ws.Path("out/wavec/alpha-schedule.txt");
  REQUIRE(fs::exists(schedule_path));
  AlphaFitResult schedule = LoadSchedule(schedule_path);
  CHECK(schedule.schedule.beta > 0.0);
  CHECK(schedule.bands.size() == 2);

  REQUIRE(Run({"report", "--config", config}, &out_text) == 0);
  CHECK(fs::exists(ws.Path("out/wavec/summary.json")));
  CHECK(Slurp(ws.Path("out/wavec/summary.txt")).find("wave_dct") !=
        std::string::npos);

  // Cached features are consumed when their config hash matches and are
  // ignored otherwise.
  std::string scores_path = ws.Path("out/wavec/snr+00db/T.scores");
  std::string dump_a = Slurp(scores_path);
  std::string cache_file =
      ws.Path("out/wavec/cache/te0000.wave_dct.snr+00db.test.feat");
  std::string hash_line = Slurp(cache_file).substr(0, Slurp(cache_file).find('\n'));
  WriteFile(cache_file,
            hash_line + "\n160 0.01 0.01\n" +
                [] {
                  std::string zeros;
                  for (int t = 0; t < 3; ++t) {
                    for (int j = 0; j < 160; ++j) zeros += j ? " 0" : "0";
                    zeros += "\n";
                  }
                  return zeros;
                }());
  REQUIRE(Run({"classify", "--config", config, "--snr", "0",
               "--dump-scores"}) == 0);
  std::string dump_b = Slurp(scores_path);
  CHECK(dump_b != dump_a);  // the poisoned cache changed the scores

  WriteFile(cache_file, "# config_hash=deadbeef seed=21\n160 0.01 0.01\n");
  REQUIRE(Run({"classify", "--config", config, "--snr", "0",
               "--dump-scores"}) == 0);
  CHECK(Slurp(scores_path) == dump_a);  // stale cache ignored, recomputed
}

TEST_CASE("diagnostic exits: bad config and matched without training data") {
  Workspace ws;
  std::string no_seed = ws.Path("noseed.cfg");
  WriteFile(no_seed, "basis = wave_dct\n");
  std::string err_text;
  CHECK(Run({"train", "--config", no_seed}, nullptr, &err_text) != 0);
  CHECK(err_text.find("seed") != std::string::npos);

  // A corpus whose training list is empty cannot serve the MATCHED policy.
  std::string config = ws.Path("m.cfg");
  WriteFile(config,
            "seed = 3\n"
            "corpus_dir = " + ws.Path("corpus") + "\n"
            "out = " + ws.Path("out") + "\n"
            "basis = wave_dct\n"
            "sectors = C\n"
            "frames = 3\n"
            "components = 1\n"
            "augment_threshold = 0\n"
            "snr_grid = 0\n"
            "synth_train_sentences = 12\n"
            "synth_test_sentences = 3\n"
            "synth_phones_per_sentence = 8\n");
  REQUIRE(Run({"synth", "--config", config}) == 0);
  REQUIRE(Run({"ingest", "--config", config}) == 0);
  REQUIRE(Run({"train", "--config", config}) == 0);
  WriteFile(ws.Path("corpus/train.list"), "");  // drop the training data
  REQUIRE(Run({"ingest", "--config", config}) == 0);
  CHECK(Run({"sweep", "--config", config, "--policy", "matched"}, nullptr,
            &err_text) != 0);
  CHECK(err_text.find("MATCHED") != std::string::npos);

  CHECK(Run({"frobnicate"}, nullptr, &err_text) != 0);
}
