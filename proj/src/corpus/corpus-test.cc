// corpus/corpus-test.cc

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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "base/error.h"
#include "corpus/class-map.h"
#include "corpus/manifest.h"
#include "corpus/phn.h"

using namespace waveclass;

namespace {

// Folding tables shipped with the repo; resolved from the source tree.
std::string DataPath(const std::string &name) {
  const char *env = std::getenv("WAVECLASS_DATA_DIR");
  std::string dir = env && *env ? env : std::string(WAVECLASS_SOURCE_DIR) + "/data";
  return dir + "/" + name;
}

ClassMap TimitMap() {
  return ClassMap::LoadFromFiles(DataPath("timit-fold48.txt"),
                                 DataPath("timit-fold39.txt"));
}

}  // namespace

TEST_CASE("phn parsing follows the file layout") {
  auto got = ParsePhnLines({"0 2400 h#", "2400 3100 sh"}, "mem");
  REQUIRE(got.size() == 2);
  CHECK(got[0].label == "h#");
  CHECK(got[0].start == 0);
  CHECK(got[0].end == 2400);
  CHECK(got[1].label == "sh");

  CHECK(ParsePhnLines({}, "mem").empty());

  CHECK_THROWS_AS(ParsePhnLines({"2400 2400 sh"}, "mem"), ValidationError);
  CHECK_THROWS_AS(ParsePhnLines({"0 100 a", "50 200 b"}, "mem"),
                  ValidationError);
  // Malformed lines carry the line number.
  try {
    ParsePhnLines({"0 100 a", "nonsense"}, "mem");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("mem:2") != std::string::npos);
  }
}

TEST_CASE("TIMIT folding tables give 48 and 39 groups") {
  ClassMap map = TimitMap();
  CHECK(map.Groups48().size() == 48);
  CHECK(map.Groups39().size() == 39);

  CHECK(map.MapLabel("q", FoldLevel::k48) == ClassMap::kRemoved);
  CHECK(map.MapLabel("aa", FoldLevel::k48) == "aa");
  CHECK(map.MapLabel("zh", FoldLevel::k39) == map.MapLabel("sh", FoldLevel::k39));
  CHECK(map.MapLabel("zh", FoldLevel::k48) != map.MapLabel("sh", FoldLevel::k48));

  CHECK_THROWS_AS(map.MapLabel("nosuch", FoldLevel::k48), ValidationError);

  // Folding idempotence: 48-level groups are fixed points of fold48.
  for (const auto &g : map.Groups48())
    CHECK(map.MapLabel(g, FoldLevel::k48) == g);
}

TEST_CASE("ExtractInstances drops removed labels and computes priors") {
  ClassMap map = TimitMap();
  std::vector<LabeledSentence> sentences(2);
  sentences[0] = {"s0", 4000, {{"sh", 0, 1000}, {"q", 1000, 2000}, {"aa", 2000, 3000}}};
  sentences[1] = {"s1", 4000, {{"q", 0, 400}}};

  std::ostringstream warnings;
  CorpusManifest manifest = ExtractInstances(sentences, map, "train", &warnings);
  REQUIRE(manifest.instances.size() == 2);
  CHECK(manifest.instances[0].group48 == "sh");
  CHECK(manifest.instances[1].group48 == "aa");
  CHECK(manifest.instances[0].center == 500);
  CHECK(warnings.str().find("s1") != std::string::npos);

  double sum = 0.0;
  for (const auto &[g, p] : manifest.priors) sum += p;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(manifest.priors.at("sh") == doctest::Approx(0.5));

  // Single-class corpus has prior exactly 1.
  CorpusManifest single = ExtractInstances(
      {{"s2", 4000, {{"aa", 0, 1000}, {"aa", 1000, 2000}, {"aa", 2000, 3000}}}},
      map, "train");
  CHECK(single.priors.at("aa") == 1.0);
}

TEST_CASE("instance count equals a direct scan of retained labels") {
  ClassMap map = TimitMap();
  // Synthetic 10-sentence corpus over a few labels, q interleaved.
  std::vector<std::string> labels = {"sh", "aa", "q", "iy", "t", "m"};
  std::vector<LabeledSentence> sentences;
  int64_t retained = 0;
  for (int s = 0; s < 10; ++s) {
    LabeledSentence sentence;
    sentence.sentence_id = "s" + std::to_string(s);
    int64_t cursor = 0;
    for (int p = 0; p <= s; ++p) {
      const std::string &label = labels[(s + p) % labels.size()];
      sentence.intervals.push_back({label, cursor, cursor + 300});
      cursor += 300;
      if (label != "q") ++retained;  // direct scan
    }
    sentence.num_samples = cursor;
    sentences.push_back(std::move(sentence));
  }
  CorpusManifest manifest = ExtractInstances(sentences, map, "train");
  CHECK(static_cast<int64_t>(manifest.instances.size()) == retained);
}

namespace {

CorpusManifest ManifestWithCounts(int64_t small_count, int64_t big_count) {
  ClassMap map = ClassMap::Identity({"a", "b"});
  std::vector<LabeledSentence> sentences;
  int64_t idx = 0;
  auto add = [&](const std::string &label, int64_t count) {
    for (int64_t i = 0; i < count; ++i) {
      LabeledSentence s;
      s.sentence_id = "s" + std::to_string(idx++);
      s.num_samples = 4000;
      s.intervals.push_back({label, 1000, 2200});
      sentences.push_back(std::move(s));
    }
  };
  add("a", small_count);
  add("b", big_count);
  return ExtractInstances(sentences, map, "train");
}

}  // namespace

TEST_CASE("augmentation grows small classes by one copy per shift") {
  CorpusManifest manifest = ManifestWithCounts(1400, 1600);
  std::vector<int64_t> shifts = {-100, -75, -50, -25, 25, 50, 75, 100};
  CorpusManifest augmented = AugmentSmallClasses(manifest, 1500, shifts);

  auto counts = augmented.CountsByGroup();
  CHECK(counts.at("a") == 1400 * 9);  // originals + 8 shifted copies
  CHECK(counts.at("b") == 1600);      // above threshold: unchanged

  // Priors are carried over from un-augmented counts.
  CHECK(augmented.priors == manifest.priors);

  CHECK(AugmentSmallClasses(manifest, 1500, {}).instances.size() ==
        manifest.instances.size());
}

TEST_CASE("augmentation preconditions") {
  CorpusManifest manifest = ManifestWithCounts(5, 5);
  CHECK_THROWS_AS(AugmentSmallClasses(manifest, 10, {0, 25}), ValidationError);

  CorpusManifest test = manifest;
  test.split = "test";
  CHECK_THROWS_AS(AugmentSmallClasses(test, 10, {25}), ValidationError);
}

TEST_CASE("augmentation skips copies pushed outside the sentence") {
  ClassMap map = ClassMap::Identity({"a"});
  // Center 150; shift -200 leaves the sentence, +200 stays.
  CorpusManifest manifest = ExtractInstances(
      {{"s0", 1000, {{"a", 100, 200}}}}, map, "train");
  std::ostringstream warnings;
  CorpusManifest augmented =
      AugmentSmallClasses(manifest, 10, {-200, 200}, &warnings);
  CHECK(augmented.instances.size() == 2);
  CHECK(warnings.str().find("skipped") != std::string::npos);
  for (const auto &inst : augmented.instances) {
    CHECK(inst.center >= 0);
    CHECK(inst.center < 1000);
  }
}

TEST_CASE("duration statistics summarize un-augmented intervals") {
  ClassMap map = ClassMap::Identity({"a", "b"});
  // a: durations 160 and 480 samples (10 and 30 ms); b: 320 (20 ms).
  CorpusManifest manifest = ExtractInstances(
      {{"s0", 4000, {{"a", 0, 160}, {"b", 500, 820}, {"a", 1000, 1480}}}},
      map, "train");
  CorpusManifest augmented = AugmentSmallClasses(manifest, 10, {100});
  auto stats = GroupDurationStats(augmented, 16000.0);
  REQUIRE(stats.count("a") == 1);
  CHECK(stats.at("a").count == 2);  // shifted copies do not count
  CHECK(stats.at("a").min_ms == doctest::Approx(10.0));
  CHECK(stats.at("a").mean_ms == doctest::Approx(20.0));
  CHECK(stats.at("a").max_ms == doctest::Approx(30.0));
  CHECK(stats.at("a").std_ms == doctest::Approx(10.0));
  CHECK(stats.at("b").std_ms == doctest::Approx(0.0));
  std::string table = FormatDurationStats(stats);
  CHECK(table.find("group count min_ms") != std::string::npos);
  CHECK(table.find("\na 2 10.0 20.0 10.0 30.0") != std::string::npos);
}

TEST_CASE("manifest save/load round-trips") {
  CorpusManifest manifest = ManifestWithCounts(3, 4);
  manifest.config_hash = "cafe";
  manifest.seed = 99;
  std::string path =
      (std::filesystem::temp_directory_path() / "wc-manifest-test.txt").string();
  SaveManifest(manifest, path);
  CorpusManifest loaded = LoadManifest(path);
  CHECK(loaded.split == manifest.split);
  CHECK(loaded.priors == manifest.priors);
  CHECK(loaded.sentence_samples == manifest.sentence_samples);
  CHECK(loaded.config_hash == "cafe");
  CHECK(loaded.seed == 99);
  REQUIRE(loaded.instances.size() == manifest.instances.size());
  for (size_t i = 0; i < loaded.instances.size(); ++i) {
    CHECK(loaded.instances[i].sentence_id == manifest.instances[i].sentence_id);
    CHECK(loaded.instances[i].center == manifest.instances[i].center);
    CHECK(loaded.instances[i].group48 == manifest.instances[i].group48);
  }
  std::filesystem::remove(path);
}
