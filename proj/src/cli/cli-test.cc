// cli/cli-test.cc

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

#include "base/error.h"
#include "base/text-io.h"
#include "cli/config.h"

using namespace waveclass;

namespace {

std::string TempFile(const std::string &name, const std::string &content) {
  namespace fs = std::filesystem;
  std::string path = (fs::temp_directory_path() / name).string();
  WriteFile(path, content);
  return path;
}

}  // namespace

TEST_CASE("config files parse key = value with comments and includes") {
  std::string inner = TempFile("wc-inner.cfg",
                               "components = 1,2,4\n"
                               "workers = 3\n");
  std::string path = TempFile("wc-outer.cfg",
                              "# experiment setup\n"
                              "seed = 99\n"
                              "basis = mfcc_deltas   # cepstral stream\n"
                              "frames = 3,5\n"
                              "include wc-inner.cfg\n"
                              "policy=cmvn\n");
  ExperimentConfig config = LoadConfigFile(path);
  CHECK(config.seed == 99);
  CHECK(config.seed_set);
  CHECK(config.basis == "mfcc_deltas");
  CHECK(config.frames == std::vector<int>{3, 5});
  CHECK(config.components == std::vector<int>{1, 2, 4});
  CHECK(config.workers == 3);
  CHECK(config.policy == "cmvn");

  std::filesystem::remove(inner);
  std::filesystem::remove(path);
}

TEST_CASE("unknown keys fail loudly with the key name") {
  ExperimentConfig config;
  try {
    ApplyConfigValue(&config, "no_such_key", "1");
    FAIL("expected ConfigError");
  } catch (const ConfigError &e) {
    CHECK(std::string(e.what()).find("no_such_key") != std::string::npos);
  }
}

TEST_CASE("validation reports field-level diagnostics") {
  ExperimentConfig config;  // seed missing
  config.policy = "bogus";
  config.sectors = "CX";
  try {
    ValidateConfig(config, /*need_corpus=*/false);
    FAIL("expected ConfigError");
  } catch (const ConfigError &e) {
    std::string msg = e.what();
    CHECK(msg.find("seed") != std::string::npos);
    CHECK(msg.find("policy") != std::string::npos);
    CHECK(msg.find("'X'") != std::string::npos);
  }

  ExperimentConfig ok;
  ok.seed = 1;
  ok.seed_set = true;
  CHECK_NOTHROW(ValidateConfig(ok, /*need_corpus=*/false));

  ok.corpus_dir = "/definitely/not/here";
  CHECK_THROWS_AS(ValidateConfig(ok, /*need_corpus=*/true), ConfigError);
}

TEST_CASE("config hashes are stable and sensitive to values") {
  ExperimentConfig a, b;
  a.seed = b.seed = 5;
  a.seed_set = b.seed_set = true;
  CHECK(ConfigHash(a) == ConfigHash(b));
  b.frames = {5, 7};
  CHECK(ConfigHash(a) != ConfigHash(b));
}

TEST_CASE("the default grid covers -18..30 dB in 6 dB steps plus quiet") {
  ExperimentConfig config;
  REQUIRE(config.snr_grid.size() == 10);
  CHECK(config.snr_grid.front() == "-18");
  CHECK(config.snr_grid[8] == "30");
  CHECK(config.snr_grid.back() == "quiet");
  for (size_t i = 0; i + 2 < config.snr_grid.size(); ++i) {
    double a = std::stod(config.snr_grid[i]);
    double b = std::stod(config.snr_grid[i + 1]);
    CHECK(b - a == doctest::Approx(6.0));
  }
  // Default protocol knobs.
  CHECK(config.augment_threshold == 1500);
  CHECK(config.shifts ==
        std::vector<int64_t>{-100, -75, -50, -25, 25, 50, 75, 100});
  CHECK(config.components == std::vector<int>{1, 2, 4, 8, 16, 32, 64, 128});
}

TEST_CASE("basis names map to the feature bases") {
  CHECK(BasisFromConfigName("wave_dct") == FeatureBasis::kWaveDct);
  CHECK(BasisFromConfigName("mfcc") == FeatureBasis::kMfcc);
  CHECK(BasisFromConfigName("mfcc_deltas") == FeatureBasis::kMfccDeltas);
  CHECK(BasisFromConfigName("external") == FeatureBasis::kExternal);
  CHECK_THROWS_AS(BasisFromConfigName("plp"), ConfigError);
}
