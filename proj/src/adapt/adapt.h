// adapt/adapt.h

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

#ifndef WAVECLASS_ADAPT_ADAPT_H_
#define WAVECLASS_ADAPT_ADAPT_H_

#include <memory>
#include <mutex>
#include <map>
#include <string>

#include "density/diag-gmm.h"
#include "density/model-bank.h"
#include "frontend/noise.h"

namespace waveclass {

// Exact adaptation of a trained density to additive noise in a linear basis:
// every component variance maps D -> (D + sigma^2 N) / (1 + sigma^2) and
// every mean maps mu -> mu / sqrt(1 + sigma^2), so the adapted mixture is
// exactly the density of (x + n) / sqrt(1 + sigma^2) under the signal model.
// Weights and component count are unchanged; the input model is untouched.
DiagGmm AdaptModel(const DiagGmm &model, const NoiseSpec &noise);

// Adapts every model in the bank; `frame_noise` carries the per-frame
// diagonal (trace_d == frame_dim) which is tiled to each model dimension.
ModelBank AdaptBank(const ModelBank &bank, const NoiseSpec &frame_noise);

// Lazy per-(sigma2, noise id) cache so SNR sweeps adapt each condition once.
// Publication is mutex-guarded; adapted banks are immutable once returned.
class AdaptedBankCache {
 public:
  explicit AdaptedBankCache(std::shared_ptr<const ModelBank> quiet_bank)
      : quiet_bank_(std::move(quiet_bank)) {}

  std::shared_ptr<const ModelBank> Get(const NoiseSpec &frame_noise);

  const ModelBank &quiet() const { return *quiet_bank_; }

 private:
  std::shared_ptr<const ModelBank> quiet_bank_;
  std::mutex mutex_;
  std::map<std::pair<uint64_t, std::string>, std::shared_ptr<const ModelBank>>
      cache_;
};

}  // namespace waveclass

#endif  // WAVECLASS_ADAPT_ADAPT_H_
