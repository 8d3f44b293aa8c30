// density/model-bank.h

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

#ifndef WAVECLASS_DENSITY_MODEL_BANK_H_
#define WAVECLASS_DENSITY_MODEL_BANK_H_

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "density/diag-gmm.h"

namespace waveclass {

// (class, sector, frame count, component count).
using BankKey = std::tuple<std::string, char, int, int>;

// (class, sector, frame count): one model-average slice.
using SliceKey = std::tuple<std::string, char, int>;

// Family of mixtures indexed by class, sector, frame count and component
// count, plus the model-average weights u_c over the component-count set.
struct ModelBank {
  std::string basis;
  int frame_dim = 0;  // per-frame feature dimension
  std::vector<std::string> classes;
  std::vector<char> sectors;              // subset of A..E, ordered
  std::vector<int> frame_counts;          // F
  std::vector<int> component_counts;      // subset of {1,2,...,128}
  std::vector<double> component_weights;  // u_c, aligned, sums to 1
  bool zero_mean = false;

  // Provenance of adapted banks.
  bool adapted = false;
  double sigma2 = 0.0;
  std::string noise_id;
  std::vector<double> noise_pattern;  // per-frame diagonal, length frame_dim

  std::string config_hash;
  uint64_t seed = 0;

  std::map<BankKey, DiagGmm> models;

  // Optional class-dependent model-average weights per slice, estimated from
  // development-set posteriors; empty means the uniform component_weights
  // apply everywhere.
  std::map<SliceKey, std::vector<double>> slice_weights;

  // Weights governing the slice: per-slice posteriors when present,
  // otherwise the bank-level u_c.
  const std::vector<double> &WeightsFor(const std::string &cls, char sector,
                                        int f) const;

  bool Has(const std::string &cls, char sector, int f, int c) const;
  const DiagGmm &Model(const std::string &cls, char sector, int f, int c) const;
  void Insert(const std::string &cls, char sector, int f, int c, DiagGmm gmm);

  // Structural checks: the component-count set must be a subset of the
  // doubling family up to 128, weights must sum to 1, every declared cell
  // must exist with dimension f * frame_dim.
  void Validate() const;
};

std::vector<double> UniformWeights(size_t n);

void SaveModelBank(const ModelBank &bank, const std::string &path);
ModelBank LoadModelBank(const std::string &path);

}  // namespace waveclass

#endif  // WAVECLASS_DENSITY_MODEL_BANK_H_
