// classifier/combine.cc

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

#include "classifier/combine.h"

#include <cmath>
#include <limits>

#include "base/error.h"

namespace waveclass {

std::string AlphaUnitsName(AlphaUnits units) {
  return units == AlphaUnits::kDb ? "DB" : "LINEAR";
}

AlphaUnits AlphaUnitsFromName(const std::string &name) {
  if (name == "DB" || name == "db") return AlphaUnits::kDb;
  if (name == "LINEAR" || name == "linear") return AlphaUnits::kLinear;
  throw ParseError("unknown alpha units: " + name);
}

double AlphaAt(const CombinationSchedule &schedule, double value) {
  if (schedule.beta <= 0.0)
    throw ValidationError("alpha schedule: beta must be positive");
  return 1.0 / (1.0 + std::exp(schedule.beta * (schedule.midpoint - value)));
}

double ConditionValue(const CombinationSchedule &schedule, SnrCondition cond) {
  if (schedule.units == AlphaUnits::kLinear) return cond.Sigma2();
  // dB units: the noise variance relative to unit-power speech, in decibels,
  // i.e. -SNR.  The sigmoid then rises as the noise does.
  if (cond.quiet) return -std::numeric_limits<double>::infinity();
  return -cond.snr_db;
}

double AlphaForCondition(const CombinationSchedule &schedule,
                         SnrCondition cond) {
  double v = ConditionValue(schedule, cond);
  if (std::isinf(v) && v < 0.0) return 0.0;  // quiet limit in dB units
  return AlphaAt(schedule, v);
}

std::vector<double> CombineLogLiks(std::span<const double> cep,
                                   std::span<const double> wave, double alpha,
                                   CombineMode mode, double d_cep,
                                   double d_wave) {
  if (cep.size() != wave.size())
    throw ConfigError("CombineLogLiks: class sets differ between streams");
  if (alpha < 0.0 || alpha > 1.0)
    throw ValidationError("CombineLogLiks: alpha must lie in [0, 1]");
  double cep_scale = 1.0 - alpha;
  double wave_scale = alpha;
  if (mode == CombineMode::kDimNormalized) {
    if (d_cep <= 0.0 || d_wave <= 0.0)
      throw ValidationError("CombineLogLiks: dimensions must be positive");
    cep_scale /= d_cep;
    wave_scale /= d_wave;
  }
  std::vector<double> out(cep.size());
  for (size_t k = 0; k < cep.size(); ++k)
    out[k] = cep_scale * cep[k] + wave_scale * wave[k];
  return out;
}

}  // namespace waveclass
