// frontend/frontend-test.cc

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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "base/error.h"
#include "base/math-util.h"
#include "base/rng.h"
#include "base/text-io.h"
#include "frontend/cmvn.h"
#include "frontend/deltas.h"
#include "frontend/external-features.h"
#include "frontend/mfcc.h"
#include "frontend/noise.h"
#include "frontend/wave-io.h"

using namespace waveclass;

TEST_CASE("NormalizeEnergy forces unit mean square") {
  std::vector<double> x = {3.0, 4.0};
  std::vector<double> y = NormalizeEnergy(x);
  CHECK(y[0] == doctest::Approx(0.84852813742385702).epsilon(1e-15));
  CHECK(y[1] == doctest::Approx(1.131370849898476).epsilon(1e-15));
  CHECK(MeanSquare(y) == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<double> again = NormalizeEnergy(y);
  for (size_t i = 0; i < y.size(); ++i)
    CHECK(again[i] == doctest::Approx(y[i]).epsilon(1e-12));

  CHECK_THROWS_AS(NormalizeEnergy(std::vector<double>{0.0, 0.0, 0.0}),
                  ValidationError);
  CHECK_THROWS_AS(NormalizeEnergy(std::vector<double>{}), ValidationError);
}

TEST_CASE("FrameSignal counts and pads") {
  std::vector<double> x(480, 1.0);
  CHECK(FrameSignal(x, 160, 160).size() == 3);

  std::vector<double> y(400, 1.0);
  auto frames = FrameSignal(y, 160, 160);
  REQUIRE(frames.size() == 3);
  for (int j = 0; j < 80; ++j) CHECK(frames[2][j] == 1.0);
  for (int j = 80; j < 160; ++j) CHECK(frames[2][j] == 0.0);

  // 25 ms / 10 ms overlapping cepstral framing.
  std::vector<double> z(16000, 1.0);
  auto overlapping = FrameSignal(z, 400, 160);
  CHECK(overlapping.size() == 100);
  CHECK(overlapping[1][0] == 1.0);
}

TEST_CASE("wave files round-trip through RIFF") {
  namespace fs = std::filesystem;
  std::string path = (fs::temp_directory_path() / "wc-wave-test.wav").string();
  std::vector<double> samples(1000);
  for (size_t i = 0; i < samples.size(); ++i)
    samples[i] = 0.8 * std::sin(0.037 * static_cast<double>(i));
  WritePcm16Wave(path, samples, 16000);
  SentenceWaveform wave = ReadWaveFile(path);
  CHECK(wave.rate == 16000.0);
  REQUIRE(wave.samples.size() == samples.size());
  for (size_t i = 0; i < samples.size(); ++i)
    CHECK(wave.samples[i] == doctest::Approx(samples[i]).epsilon(1e-3));
  fs::remove(path);
}

TEST_CASE("NIST SPHERE files decode in both byte orders") {
  namespace fs = std::filesystem;
  std::vector<int16_t> samples = {0, 5120, -5120, 256, -32768};
  for (bool big_endian : {false, true}) {
    std::string header = "NIST_1A\n   1024\n";
    header += "sample_rate -i 16000\n";
    header += "channel_count -i 1\n";
    header += "sample_n_bytes -i 2\n";
    header += std::string("sample_byte_format -s2 ") +
              (big_endian ? "10" : "01") + "\n";
    header += "sample_count -i 5\n";
    header += "end_head\n";
    header.resize(1024, ' ');
    for (int16_t v : samples) {
      unsigned char lo = static_cast<unsigned char>(v & 0xff);
      unsigned char hi = static_cast<unsigned char>((v >> 8) & 0xff);
      if (big_endian) {
        header.push_back(static_cast<char>(hi));
        header.push_back(static_cast<char>(lo));
      } else {
        header.push_back(static_cast<char>(lo));
        header.push_back(static_cast<char>(hi));
      }
    }
    std::string path =
        (fs::temp_directory_path() / "wc-sphere-test.wav").string();
    {
      std::ofstream out(path, std::ios::binary);
      out.write(header.data(), static_cast<std::streamsize>(header.size()));
    }
    SentenceWaveform wave = ReadWaveFile(path);
    CHECK(wave.rate == 16000.0);
    REQUIRE(wave.samples.size() == samples.size());
    for (size_t i = 0; i < samples.size(); ++i)
      CHECK(wave.samples[i] ==
            doctest::Approx(samples[i] / 32768.0).epsilon(1e-12));
    fs::remove(path);
  }
}

TEST_CASE("headerless raw audio reads through the rate sidecar") {
  namespace fs = std::filesystem;
  std::string path = (fs::temp_directory_path() / "wc-raw-test.raw").string();
  std::vector<unsigned char> bytes;
  std::vector<int16_t> samples = {0, 1000, -1000, 32767, -32768};
  for (int16_t v : samples) {
    bytes.push_back(static_cast<unsigned char>(v & 0xff));
    bytes.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  }
  {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char *>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  WriteFile(path + ".rate", "8000\n");
  SentenceWaveform wave = ReadWaveFile(path);
  CHECK(wave.rate == 8000.0);
  REQUIRE(wave.samples.size() == samples.size());
  CHECK(wave.samples[1] == doctest::Approx(1000.0 / 32768.0));
  CHECK(wave.samples[3] == doctest::Approx(32767.0 / 32768.0));
  fs::remove(path);
  fs::remove(path + ".rate");
}

namespace {

SentenceWaveform TestSentence(int n, uint64_t seed) {
  Rng rng(seed);
  SentenceWaveform wave;
  wave.sentence_id = "t";
  wave.rate = 16000.0;
  wave.samples.resize(n);
  for (double &v : wave.samples) v = rng.Gaussian() + 0.3 * std::sin(v);
  return Normalized(wave);
}

}  // namespace

TEST_CASE("condition names round-trip") {
  for (double db : {-18.0, -6.0, 0.0, 12.0, 30.0}) {
    SnrCondition c = SnrCondition::Db(db);
    SnrCondition back = ParseCondition(c.Name());
    CHECK(back == c);
  }
  CHECK(ParseCondition("quiet").quiet);
  CHECK(ParseCondition("Q").quiet);
  CHECK(ParseCondition("-6") == SnrCondition::Db(-6));
  CHECK(SnrCondition::Quiet().Name() == "quiet");
  CHECK(SnrCondition::Db(0).Name() == "snr+00db");
  CHECK(SnrCondition::Db(-18).Name() == "snr-18db");
  CHECK_THROWS_AS(ParseCondition("loud"), ParseError);
}

TEST_CASE("MixNoise honors the SNR definition") {
  SentenceWaveform x = TestSentence(100000, 1);
  WhiteNoiseSource noise;

  SentenceWaveform quiet = MixNoise(x, noise, SnrCondition::Quiet(), 7);
  CHECK(quiet.samples == x.samples);  // QUIET returns the input exactly

  CHECK(SnrCondition::Db(0).Sigma2() == doctest::Approx(1.0));

  // Measured pre-renormalization noise/speech power ratio at 6 dB.
  double sigma = std::sqrt(SnrCondition::Db(6).Sigma2());
  std::vector<double> n = noise.Sample(x.samples.size(), 7);
  double noise_power = 0.0;
  for (double v : n) noise_power += sigma * v * sigma * v;
  noise_power /= static_cast<double>(n.size());
  CHECK(noise_power ==
        doctest::Approx(std::pow(10.0, -0.6)).epsilon(0.02));

  SentenceWaveform mixed = MixNoise(x, noise, SnrCondition::Db(6), 7);
  CHECK(MeanSquare(mixed.samples) == doctest::Approx(1.0).epsilon(1e-9));

  SentenceWaveform mixed2 = MixNoise(x, noise, SnrCondition::Db(6), 7);
  CHECK(mixed.samples == mixed2.samples);  // bit-reproducible under the seed

  SentenceWaveform other = MixNoise(x, noise, SnrCondition::Db(6), 8);
  CHECK(mixed.samples != other.samples);
}

TEST_CASE("MixNoise preconditions and degenerate noise") {
  SentenceWaveform raw;
  raw.samples = {1.0, 2.0};
  raw.rate = 16000.0;
  WhiteNoiseSource noise;
  CHECK_THROWS_AS(MixNoise(raw, noise, SnrCondition::Db(0), 1),
                  ValidationError);
  CHECK_THROWS_AS(FileNoiseSource(std::vector<double>(100, 0.0), "silence"),
                  ValidationError);
}

TEST_CASE("file noise cuts at a seeded offset and normalizes the segment") {
  Rng rng(9);
  std::vector<double> samples(50000);
  for (double &v : samples) v = 3.0 * rng.Gaussian();
  FileNoiseSource source(samples, "test-noise");
  std::vector<double> a = source.Sample(8000, 4);
  std::vector<double> b = source.Sample(8000, 4);
  CHECK(a == b);
  CHECK(MeanSquare(a) == doctest::Approx(1.0).epsilon(1e-9));
  std::vector<double> c = source.Sample(8000, 5);
  CHECK(a != c);
}

TEST_CASE("noise covariance estimate is flat for white noise") {
  const int block = 160;
  WhiteNoiseSource noise;
  std::vector<double> samples = noise.Sample(1000000, 42);
  std::vector<double> diag = EstimateNoiseCovDiag(samples, block);
  double sum = 0.0, max_dev = 0.0;
  for (double v : diag) {
    sum += v;
    max_dev = std::max(max_dev, std::abs(v - 1.0));
  }
  CHECK(std::abs(sum - block) < 1e-6);
  CHECK(max_dev < 0.05);

  CHECK_THROWS_AS(EstimateNoiseCovDiag(std::vector<double>(50 * block, 1.0),
                                       block),
                  ValidationError);  // insufficient samples (need 100 blocks)
  CHECK_THROWS_AS(EstimateNoiseCovDiag(std::vector<double>(200 * block, 0.0),
                                       block),
                  ValidationError);  // constant-zero noise is degenerate

  NoiseSpec spec = NoiseSpecForDim(diag, 3 * block, 0.5, "WAVE_DCT", "white");
  CHECK(spec.trace_d == 3 * block);
  double total = 0.0;
  for (double v : spec.n_diag) total += v;
  CHECK(total == doctest::Approx(3.0 * block).epsilon(1e-9));
}

TEST_CASE("MFCC dimension and scaling behavior") {
  Rng rng(21);
  std::vector<double> frame(400);
  for (double &v : frame) v = rng.Gaussian() + 0.8 * std::sin(0.12 * v);
  std::vector<double> base = ComputeMfcc(frame, 16000.0);
  CHECK(base.size() == 13);

  const double g = 3.7;
  std::vector<double> scaled(frame);
  for (double &v : scaled) v *= g;
  std::vector<double> out = ComputeMfcc(scaled, 16000.0);
  for (int k = 1; k < 13; ++k)
    CHECK(std::abs(out[k] - base[k]) < 1e-9);
  // c0 shifts by sqrt(num_filters) * log g under the orthonormal DCT.
  CHECK(out[0] - base[0] ==
        doctest::Approx(std::sqrt(26.0) * std::log(g)).epsilon(1e-9));

  std::vector<double> silent(400, 0.0);
  std::vector<double> floored = ComputeMfcc(silent, 16000.0);
  for (double v : floored) CHECK(std::isfinite(v));
}

TEST_CASE("MfccFeatures covers the sentence with 25ms/10ms frames") {
  SentenceWaveform wave = TestSentence(16000, 2);
  FeatureMatrix m = MfccFeatures(wave);
  CHECK(m.dim == 13);
  CHECK(m.num_frames == 100);
  CHECK(m.width_seconds == doctest::Approx(0.025));
  CHECK(m.basis == FeatureBasis::kMfcc);
}

TEST_CASE("deltas: constants vanish, ramps give constant slope") {
  FeatureMatrix m;
  m.basis = FeatureBasis::kMfcc;
  m.num_frames = 10;
  m.dim = 2;
  m.hop_seconds = 0.01;
  m.width_seconds = 0.025;
  m.data.resize(20);
  for (int t = 0; t < 10; ++t) {
    m.data[2 * t] = 5.0;                      // constant coefficient
    m.data[2 * t + 1] = 0.25 * t;             // linear ramp
  }
  FeatureMatrix d = AppendDeltas(m);
  CHECK(d.dim == 6);
  CHECK(d.basis == FeatureBasis::kMfccDeltas);
  for (int t = 0; t < 10; ++t) {
    CHECK(d.Frame(t)[2] == 0.0);  // delta of constant
    CHECK(d.Frame(t)[4] == 0.0);  // delta-delta of constant
  }
  // Edge replication flattens the first and last two deltas, so the ramp
  // slope holds from t=2 and the second difference vanishes from t=4.
  for (int t = 2; t < 8; ++t)
    CHECK(d.Frame(t)[3] == doctest::Approx(0.25).epsilon(1e-12));
  for (int t = 4; t < 6; ++t)
    CHECK(d.Frame(t)[5] == doctest::Approx(0.0).epsilon(1e-12));

  // 13-dimensional input becomes 39.
  FeatureMatrix m13;
  m13.basis = FeatureBasis::kMfcc;
  m13.num_frames = 7;
  m13.dim = 13;
  m13.hop_seconds = 0.01;
  m13.width_seconds = 0.025;
  m13.data.assign(7 * 13, 0.5);
  CHECK(AppendDeltas(m13).dim == 39);
}

TEST_CASE("CMVN standardizes as declared") {
  Rng rng(31);
  FeatureMatrix m;
  m.basis = FeatureBasis::kMfcc;
  m.num_frames = 50;
  m.dim = 3;
  m.hop_seconds = 0.01;
  m.width_seconds = 0.025;
  m.data.resize(150);
  for (double &v : m.data) v = 2.0 + 3.0 * rng.Gaussian();

  StandardizationStats stats = ComputeStats({&m}, StatsSource::kTrainset);
  FeatureMatrix normed = ApplyCmvn(m, stats);
  for (int j = 0; j < 3; ++j) {
    double mean = 0.0, var = 0.0;
    for (int t = 0; t < 50; ++t) mean += normed.Frame(t)[j];
    mean /= 50;
    for (int t = 0; t < 50; ++t) {
      double d = normed.Frame(t)[j] - mean;
      var += d * d;
    }
    var /= 50;
    CHECK(std::abs(mean) < 1e-9);
    CHECK(var == doctest::Approx(1.0).epsilon(1e-9));
  }

  // Features equal to the stats mean map to zero.
  FeatureMatrix at_mean = m;
  for (int t = 0; t < at_mean.num_frames; ++t)
    for (int j = 0; j < 3; ++j) at_mean.MutableFrame(t)[j] = stats.mean[j];
  FeatureMatrix zeros = ApplyCmvn(at_mean, stats);
  for (double v : zeros.data) CHECK(std::abs(v) < 1e-12);

  // Sentence mode on a two-frame sentence: recompute directly.
  FeatureMatrix two;
  two.basis = FeatureBasis::kMfcc;
  two.num_frames = 2;
  two.dim = 1;
  two.hop_seconds = 0.01;
  two.width_seconds = 0.025;
  two.data = {1.0, 3.0};
  StandardizationStats sstats = ComputeSentenceStats(two);
  FeatureMatrix snormed = ApplyCmvn(two, sstats);
  // mean 2, population variance 1.
  CHECK(snormed.data[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(snormed.data[1] == doctest::Approx(1.0).epsilon(1e-12));

  // Constant feature hits the variance floor and is flagged.
  FeatureMatrix flat = two;
  flat.data = {4.0, 4.0};
  StandardizationStats fstats = ComputeSentenceStats(flat);
  CHECK(fstats.floored_dims == 1);

  StandardizationStats bad;
  bad.mean = {0.0, 0.0};
  bad.var = {1.0, 1.0};
  CHECK_THROWS_AS(ApplyCmvn(two, bad), ShapeError);
}

TEST_CASE("external feature files round-trip with provenance comments") {
  namespace fs = std::filesystem;
  std::string path = (fs::temp_directory_path() / "wc-ext-test.feat").string();
  FeatureMatrix m;
  m.basis = FeatureBasis::kExternal;
  m.num_frames = 4;
  m.dim = 3;
  m.hop_seconds = 0.01;
  m.width_seconds = 0.025;
  Rng rng(8);
  m.data.resize(12);
  for (double &v : m.data) v = rng.Gaussian();
  WriteFeatureFile(path, m, "config_hash=deadbeef seed=5");

  FeatureMatrix back = ReadFeatureFile(path, FeatureBasis::kExternal);
  CHECK(back.num_frames == 4);
  CHECK(back.dim == 3);
  CHECK(back.hop_seconds == m.hop_seconds);
  CHECK(back.data == m.data);  // full-precision round-trip
  fs::remove(path);

  CHECK_THROWS_AS(ReadFeatureFile("/nonexistent/x.feat", FeatureBasis::kExternal),
                  IoError);
}
