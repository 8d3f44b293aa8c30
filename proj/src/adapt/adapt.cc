// adapt/adapt.cc

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

#include "adapt/adapt.h"

#include <cmath>
#include <cstring>

#include "base/error.h"
#include "frontend/feature-matrix.h"

namespace waveclass {

namespace {

void CheckAdaptable(const std::string &basis) {
  // Model-side adaptation is exact only when noise stays additive, i.e. in
  // bases that are a linear transform of the waveform.  Cepstral models are
  // compensated by CMVN or matched retraining instead.
  if (!IsLinearBasis(BasisFromName(basis)))
    throw ConfigError("noise adaptation is offered only in linear bases, not " +
                      basis);
}

}  // namespace

DiagGmm AdaptModel(const DiagGmm &model, const NoiseSpec &noise) {
  if (noise.sigma2 < 0.0)
    throw ValidationError("AdaptModel: sigma2 must be non-negative");
  if (noise.basis != model.basis())
    throw ConfigError("AdaptModel: model basis " + model.basis() +
                      " does not match noise basis " + noise.basis);
  if (static_cast<int>(noise.n_diag.size()) != model.Dim())
    throw ShapeError("AdaptModel: noise diagonal length != model dimension");
  CheckAdaptable(model.basis());

  const double sigma2 = noise.sigma2;
  const double inv_norm = 1.0 / (1.0 + sigma2);
  const double mean_scale = 1.0 / std::sqrt(1.0 + sigma2);
  std::vector<DiagGaussianComponent> comps = model.components();
  for (auto &comp : comps) {
    for (int j = 0; j < model.Dim(); ++j) {
      comp.var[j] = (comp.var[j] + sigma2 * noise.n_diag[j]) * inv_norm;
      comp.mean[j] *= mean_scale;
    }
  }
  return DiagGmm(std::move(comps), model.basis(), model.zero_mean());
}

ModelBank AdaptBank(const ModelBank &bank, const NoiseSpec &frame_noise) {
  if (bank.adapted)
    throw ConfigError("AdaptBank: bank is already adapted (to " +
                      bank.noise_id + ", sigma2=" +
                      std::to_string(bank.sigma2) + "); adapt quiet banks");
  if (frame_noise.trace_d != bank.frame_dim)
    throw ShapeError("AdaptBank: noise pattern must cover one frame");
  ModelBank out = bank;
  out.adapted = true;
  out.sigma2 = frame_noise.sigma2;
  out.noise_id = frame_noise.noise_id;
  out.noise_pattern = frame_noise.n_diag;
  for (auto &[key, model] : out.models) {
    NoiseSpec tiled = NoiseSpecForDim(frame_noise.n_diag, model.Dim(),
                                      frame_noise.sigma2, bank.basis,
                                      frame_noise.noise_id);
    model = AdaptModel(model, tiled);
  }
  return out;
}

std::shared_ptr<const ModelBank> AdaptedBankCache::Get(
    const NoiseSpec &frame_noise) {
  uint64_t sigma_bits;
  static_assert(sizeof(sigma_bits) == sizeof(frame_noise.sigma2));
  std::memcpy(&sigma_bits, &frame_noise.sigma2, sizeof(sigma_bits));
  std::pair<uint64_t, std::string> key{sigma_bits, frame_noise.noise_id};

  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto adapted =
      std::make_shared<const ModelBank>(AdaptBank(*quiet_bank_, frame_noise));
  cache_[key] = adapted;
  return adapted;
}

}  // namespace waveclass
