// classifier/rules.h

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

#ifndef WAVECLASS_CLASSIFIER_RULES_H_
#define WAVECLASS_CLASSIFIER_RULES_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "classifier/assembly.h"
#include "corpus/manifest.h"
#include "density/model-bank.h"
#include "frontend/feature-matrix.h"

namespace waveclass {

// Sum of model-average log-likelihoods over the frame-count set (an
// independence-style sum, no renormalisation).
double FAverageLogLik(std::span<const double> per_f_model_averages);

// Sum over the five (or configured) sectors.
double SectorSumLogLik(std::span<const double> per_sector_logliks);

// Which of the prediction functions scores an instance.  kModelAverage and
// kSectorSum are parameterised by a single frame count; kFAverage and
// kCombined use the bank's whole frame-count set.
enum class RuleKind { kModelAverage, kFAverage, kSectorSum, kCombined };

struct Rule {
  RuleKind kind = RuleKind::kCombined;
  int f = 0;  // used by kModelAverage / kSectorSum

  std::string Name() const;
};

// "T", "R", "M:9", "S:7".
Rule ParseRule(const std::string &text);

// Assemblies for one instance, indexed [sector][frame count] in bank order.
struct InstanceAssemblies {
  std::vector<std::vector<std::vector<double>>> vectors;
};

// Anchors follow the instance's temporal shift.
InstanceAssemblies BuildAssemblies(const FeatureMatrix &sentence_features,
                                   const PhonemeInstance &instance,
                                   std::span<const char> sectors,
                                   std::span<const int> frame_counts);

// Per-class decision values for the rule; priors are not applied here.
std::vector<double> ScoreInstance(const ModelBank &bank,
                                  const InstanceAssemblies &assemblies,
                                  const Rule &rule);

struct Prediction {
  int class_index = -1;
  std::string class_id;
  std::vector<double> scores;  // decision values including log-priors
};

// argmax_k scores[k] + log(priors[k]); exact ties take the lowest index.
Prediction Predict(std::span<const double> scores,
                   std::span<const double> priors,
                   std::span<const std::string> classes);

// Priors aligned with a class list, from a manifest prior map.
std::vector<double> AlignedPriors(const std::map<std::string, double> &priors,
                                  std::span<const std::string> classes);

}  // namespace waveclass

#endif  // WAVECLASS_CLASSIFIER_RULES_H_
