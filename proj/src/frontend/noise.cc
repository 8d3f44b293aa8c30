// frontend/noise.cc

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

#include "frontend/noise.h"

#include <cmath>
#include <cstdio>

#include "base/error.h"
#include "base/math-util.h"
#include "base/rng.h"
#include "frontend/dct.h"

namespace waveclass {

double SnrCondition::Sigma2() const {
  return quiet ? 0.0 : std::pow(10.0, -snr_db / 10.0);
}

std::string SnrCondition::Name() const {
  if (quiet) return "quiet";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snr%+03ddb",
                static_cast<int>(std::lround(snr_db)));
  return buf;
}

SnrCondition ParseCondition(const std::string &name) {
  if (name == "quiet" || name == "q" || name == "Q") return SnrCondition::Quiet();
  std::string s = name;
  if (s.rfind("snr", 0) == 0) s = s.substr(3);
  if (s.size() > 2 && s.substr(s.size() - 2) == "db") s = s.substr(0, s.size() - 2);
  try {
    size_t used = 0;
    double db = std::stod(s, &used);
    if (used == s.size()) return SnrCondition::Db(db);
  } catch (...) {
  }
  throw ParseError("bad SNR condition: " + name);
}

std::vector<double> WhiteNoiseSource::Sample(size_t n, uint64_t seed) const {
  Rng rng(seed);
  std::vector<double> out(n);
  for (double &v : out) v = rng.Gaussian();
  return out;
}

FileNoiseSource::FileNoiseSource(std::vector<double> samples, std::string id)
    : samples_(std::move(samples)), id_(std::move(id)) {
  if (samples_.empty() || MeanSquare(samples_) <= 0.0)
    throw ValidationError("degenerate noise sample file: " + id_);
}

std::shared_ptr<FileNoiseSource> FileNoiseSource::FromFile(
    const std::string &path) {
  SentenceWaveform wave = ReadWaveFile(path);
  return std::make_shared<FileNoiseSource>(std::move(wave.samples),
                                           wave.sentence_id);
}

std::vector<double> FileNoiseSource::Sample(size_t n, uint64_t seed) const {
  Rng rng(seed);
  size_t offset = static_cast<size_t>(
      rng.UniformInt(static_cast<int64_t>(samples_.size())));
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = samples_[(offset + i) % samples_.size()];
  double ms = MeanSquare(out);
  if (ms <= 0.0) throw ValidationError("degenerate noise segment: " + id_);
  double scale = 1.0 / std::sqrt(ms);
  for (double &v : out) v *= scale;
  return out;
}

SentenceWaveform MixNoise(const SentenceWaveform &x, const NoiseSource &noise,
                          SnrCondition condition, uint64_t seed) {
  if (!x.normalized)
    throw ValidationError("MixNoise: sentence must be normalized first");
  if (condition.quiet) return x;
  double sigma = std::sqrt(condition.Sigma2());
  std::vector<double> n = noise.Sample(x.samples.size(), seed);
  SentenceWaveform out = x;
  for (size_t i = 0; i < out.samples.size(); ++i)
    out.samples[i] += sigma * n[i];
  out.samples = NormalizeEnergy(out.samples);
  out.normalized = true;
  return out;
}

NoiseSpec WhiteNoiseSpec(int d, double sigma2, const std::string &basis) {
  if (sigma2 < 0.0) throw ValidationError("WhiteNoiseSpec: sigma2 < 0");
  NoiseSpec spec;
  spec.sigma2 = sigma2;
  spec.n_diag.assign(d, 1.0);
  spec.trace_d = d;
  spec.basis = basis;
  spec.noise_id = "white";
  return spec;
}

std::vector<double> EstimateNoiseCovDiag(std::span<const double> noise,
                                         int block) {
  if (block <= 0) throw ValidationError("EstimateNoiseCovDiag: bad block");
  int64_t n_blocks = static_cast<int64_t>(noise.size()) / block;
  if (n_blocks < 100)
    throw ValidationError("EstimateNoiseCovDiag: need at least 100 blocks");
  auto dct = DctMatrix::Get(block);
  std::vector<double> acc(block, 0.0), coef(block);
  for (int64_t b = 0; b < n_blocks; ++b) {
    dct->Forward(noise.subspan(static_cast<size_t>(b) * block, block), coef);
    for (int j = 0; j < block; ++j) acc[j] += coef[j] * coef[j];
  }
  double total = 0.0;
  for (double v : acc) total += v;
  if (total <= 0.0)
    throw ValidationError("EstimateNoiseCovDiag: degenerate noise");
  // Entries must stay strictly positive after trace normalisation.
  double floor = 1e-12 * total / block;
  double sum = 0.0;
  for (double &v : acc) {
    v = std::max(v, floor);
    sum += v;
  }
  double scale = block / sum;
  for (double &v : acc) v *= scale;
  return acc;
}

NoiseSpec NoiseSpecForDim(std::span<const double> block_pattern, int d,
                          double sigma2, const std::string &basis,
                          const std::string &noise_id) {
  if (sigma2 < 0.0) throw ValidationError("NoiseSpecForDim: sigma2 < 0");
  int block = static_cast<int>(block_pattern.size());
  if (block == 0 || d % block != 0)
    throw ShapeError("NoiseSpecForDim: d must be a multiple of the pattern");
  NoiseSpec spec;
  spec.sigma2 = sigma2;
  spec.trace_d = d;
  spec.basis = basis;
  spec.noise_id = noise_id;
  spec.n_diag.resize(d);
  for (int i = 0; i < d; ++i) spec.n_diag[i] = block_pattern[i % block];
  return spec;
}

uint64_t SentenceSeed(uint64_t master, const std::string &stream,
                      const std::string &sentence_id) {
  return DeriveSeed(master, stream + "/" + sentence_id);
}

}  // namespace waveclass
