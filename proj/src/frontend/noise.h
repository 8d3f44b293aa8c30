// frontend/noise.h

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

#ifndef WAVECLASS_FRONTEND_NOISE_H_
#define WAVECLASS_FRONTEND_NOISE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "frontend/wave-io.h"

namespace waveclass {

// Noise condition of one experiment cell.  QUIET is a distinguished sentinel,
// not a large SNR value: mixing under QUIET returns the input bit-exactly.
struct SnrCondition {
  bool quiet = true;
  double snr_db = 0.0;

  static SnrCondition Quiet() { return {true, 0.0}; }
  static SnrCondition Db(double db) { return {false, db}; }

  // Linear noise variance relative to unit-power speech; 0 under QUIET.
  double Sigma2() const;
  std::string Name() const;  // "quiet", "snr+06db", "snr-18db", ...
  bool operator==(const SnrCondition &o) const {
    return quiet == o.quiet && (quiet || snr_db == o.snr_db);
  }
};

SnrCondition ParseCondition(const std::string &name);

// Deterministic noise generator: the same (length, seed) yields the same
// samples regardless of call order, so per-sentence parallelism is safe.
// Samples average unit power.
class NoiseSource {
 public:
  virtual ~NoiseSource() = default;
  virtual std::string Id() const = 0;
  virtual bool IsWhite() const = 0;
  virtual std::vector<double> Sample(size_t n, uint64_t seed) const = 0;
};

class WhiteNoiseSource : public NoiseSource {
 public:
  std::string Id() const override { return "white"; }
  bool IsWhite() const override { return true; }
  std::vector<double> Sample(size_t n, uint64_t seed) const override;
};

// Cuts a segment at a seeded random offset (wrapping) and rescales it to unit
// mean square.  Throws ValidationError for an all-zero sample file.
class FileNoiseSource : public NoiseSource {
 public:
  FileNoiseSource(std::vector<double> samples, std::string id);
  static std::shared_ptr<FileNoiseSource> FromFile(const std::string &path);

  std::string Id() const override { return id_; }
  bool IsWhite() const override { return false; }
  std::vector<double> Sample(size_t n, uint64_t seed) const override;

  std::span<const double> samples() const { return samples_; }

 private:
  std::vector<double> samples_;
  std::string id_;
};

// Adds noise scaled to per-sample power sigma^2 = 10^(-snr_db/10) relative to
// the (already normalized) sentence, then renormalizes the sum to unit energy
// per sample.
SentenceWaveform MixNoise(const SentenceWaveform &x, const NoiseSource &noise,
                          SnrCondition condition, uint64_t seed);

// Diagonal noise covariance in the model basis, trace-normalised to d.
struct NoiseSpec {
  double sigma2 = 0.0;
  std::vector<double> n_diag;  // length trace_d; sum == trace_d
  int trace_d = 0;
  std::string basis;    // model basis the diagonal lives in
  std::string noise_id; // provenance (source id or "white")
};

NoiseSpec WhiteNoiseSpec(int d, double sigma2, const std::string &basis);

// Per-block diagonal of the block-DCT-domain noise covariance, rescaled so
// the entries sum to the block size.  Needs at least 100 blocks of samples.
std::vector<double> EstimateNoiseCovDiag(std::span<const double> noise,
                                         int block);

// Tiles a per-block pattern up to model dimension d (d % pattern size == 0).
NoiseSpec NoiseSpecForDim(std::span<const double> block_pattern, int d,
                          double sigma2, const std::string &basis,
                          const std::string &noise_id);

// Seed for one sentence under one split/condition stream.
uint64_t SentenceSeed(uint64_t master, const std::string &stream,
                      const std::string &sentence_id);

}  // namespace waveclass

#endif  // WAVECLASS_FRONTEND_NOISE_H_
