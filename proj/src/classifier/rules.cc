// classifier/rules.cc

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

#include "classifier/rules.h"

#include <algorithm>
#include <cmath>

#include "base/error.h"
#include "classifier/anchors.h"
#include "density/model-average.h"

namespace waveclass {

double FAverageLogLik(std::span<const double> per_f_model_averages) {
  if (per_f_model_averages.empty())
    throw ConfigError("f-average over an empty frame-count set");
  double sum = 0.0;
  for (double v : per_f_model_averages) sum += v;
  return sum;
}

double SectorSumLogLik(std::span<const double> per_sector_logliks) {
  if (per_sector_logliks.empty())
    throw ConfigError("sector sum over an empty sector set");
  double sum = 0.0;
  for (double v : per_sector_logliks) sum += v;
  return sum;
}

std::string Rule::Name() const {
  switch (kind) {
    case RuleKind::kModelAverage: return "M" + std::to_string(f);
    case RuleKind::kFAverage: return "R";
    case RuleKind::kSectorSum: return "S" + std::to_string(f);
    case RuleKind::kCombined: return "T";
  }
  throw ValidationError("unreachable rule kind");
}

Rule ParseRule(const std::string &text) {
  Rule rule;
  if (text == "T") {
    rule.kind = RuleKind::kCombined;
    return rule;
  }
  if (text == "R") {
    rule.kind = RuleKind::kFAverage;
    return rule;
  }
  if (!text.empty() && (text[0] == 'M' || text[0] == 'S')) {
    rule.kind = text[0] == 'M' ? RuleKind::kModelAverage : RuleKind::kSectorSum;
    std::string arg = text.substr(1);
    if (!arg.empty() && arg[0] == ':') arg = arg.substr(1);
    if (arg.empty())
      throw ParseError("rule " + text + " needs a frame count, e.g. " +
                       text.substr(0, 1) + ":9");
    rule.f = static_cast<int>(std::stol(arg));
    return rule;
  }
  throw ParseError("unknown rule: " + text);
}

InstanceAssemblies BuildAssemblies(const FeatureMatrix &sentence_features,
                                   const PhonemeInstance &instance,
                                   std::span<const char> sectors,
                                   std::span<const int> frame_counts) {
  InstanceAssemblies out;
  out.vectors.resize(sectors.size());
  for (size_t s = 0; s < sectors.size(); ++s) {
    double anchor = static_cast<double>(
        AnchorForSector(instance.interval, sectors[s]) + instance.shift);
    out.vectors[s].reserve(frame_counts.size());
    for (int f : frame_counts)
      out.vectors[s].push_back(AssembleFrames(sentence_features, anchor, f));
  }
  return out;
}

namespace {

// Indices into the bank's sector / frame-count lists selected by the rule.
struct RuleSelection {
  std::vector<size_t> sector_idx;
  std::vector<size_t> f_idx;
};

RuleSelection SelectForRule(const ModelBank &bank, const Rule &rule) {
  RuleSelection sel;
  bool all_sectors = rule.kind == RuleKind::kSectorSum ||
                     rule.kind == RuleKind::kCombined;
  if (all_sectors) {
    for (size_t i = 0; i < bank.sectors.size(); ++i) sel.sector_idx.push_back(i);
  } else {
    // Centre-only rules: sector C, or the bank's single sector.
    auto it = std::find(bank.sectors.begin(), bank.sectors.end(), 'C');
    if (it == bank.sectors.end()) {
      if (bank.sectors.size() != 1)
        throw ConfigError("rule " + rule.Name() +
                          " needs sector C or a single-sector bank");
      it = bank.sectors.begin();
    }
    sel.sector_idx.push_back(
        static_cast<size_t>(std::distance(bank.sectors.begin(), it)));
  }
  bool all_f = rule.kind == RuleKind::kFAverage ||
               rule.kind == RuleKind::kCombined;
  if (all_f) {
    for (size_t i = 0; i < bank.frame_counts.size(); ++i) sel.f_idx.push_back(i);
  } else {
    auto it = std::find(bank.frame_counts.begin(), bank.frame_counts.end(),
                        rule.f);
    if (it == bank.frame_counts.end())
      throw ConfigError("rule " + rule.Name() + ": frame count " +
                        std::to_string(rule.f) + " not in the bank");
    sel.f_idx.push_back(
        static_cast<size_t>(std::distance(bank.frame_counts.begin(), it)));
  }
  return sel;
}

}  // namespace

std::vector<double> ScoreInstance(const ModelBank &bank,
                                  const InstanceAssemblies &assemblies,
                                  const Rule &rule) {
  if (assemblies.vectors.size() != bank.sectors.size())
    throw ShapeError("ScoreInstance: assemblies do not match bank sectors");
  RuleSelection sel = SelectForRule(bank, rule);

  std::vector<double> scores(bank.classes.size(), 0.0);
  std::vector<double> logliks(bank.component_counts.size());
  for (size_t k = 0; k < bank.classes.size(); ++k) {
    double total = 0.0;
    for (size_t si : sel.sector_idx) {
      for (size_t fi : sel.f_idx) {
        const std::vector<double> &x = assemblies.vectors[si][fi];
        for (size_t ci = 0; ci < bank.component_counts.size(); ++ci) {
          const DiagGmm &m =
              bank.Model(bank.classes[k], bank.sectors[si],
                         bank.frame_counts[fi], bank.component_counts[ci]);
          logliks[ci] = m.LogLikelihood(x);
        }
        total += CombineModelLogLiks(
            logliks, bank.WeightsFor(bank.classes[k], bank.sectors[si],
                                     bank.frame_counts[fi]));
      }
    }
    scores[k] = total;
  }
  return scores;
}

Prediction Predict(std::span<const double> scores,
                   std::span<const double> priors,
                   std::span<const std::string> classes) {
  if (scores.empty()) throw ConfigError("Predict: empty class set");
  if (scores.size() != priors.size() || scores.size() != classes.size())
    throw ShapeError("Predict: scores, priors and classes disagree");
  double prior_sum = 0.0;
  for (double p : priors) {
    if (p <= 0.0) throw ValidationError("Predict: priors must be positive");
    prior_sum += p;
  }
  if (std::abs(prior_sum - 1.0) > 1e-6)
    throw ValidationError("Predict: priors must sum to 1");

  Prediction out;
  out.scores.resize(scores.size());
  int best = 0;
  for (size_t k = 0; k < scores.size(); ++k) {
    out.scores[k] = scores[k] + std::log(priors[k]);
    if (out.scores[k] > out.scores[best]) best = static_cast<int>(k);
  }
  out.class_index = best;
  out.class_id = classes[best];
  return out;
}

std::vector<double> AlignedPriors(const std::map<std::string, double> &priors,
                                  std::span<const std::string> classes) {
  std::vector<double> out;
  out.reserve(classes.size());
  for (const auto &c : classes) {
    auto it = priors.find(c);
    if (it == priors.end())
      throw ConfigError("no prior for class " + c);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace waveclass
