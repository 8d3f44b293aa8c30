// classifier/combine.h

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

#ifndef WAVECLASS_CLASSIFIER_COMBINE_H_
#define WAVECLASS_CLASSIFIER_COMBINE_H_

#include <span>
#include <string>
#include <vector>

#include "frontend/noise.h"

namespace waveclass {

// Interpretation of the sigmoid argument: the noise variance in decibels
// (relative to unit-power speech, i.e. -SNR) or the linear noise variance.
// Both readings of the schedule are supported; a fitted schedule records
// which one it used.
enum class AlphaUnits { kDb, kLinear };

std::string AlphaUnitsName(AlphaUnits units);
AlphaUnits AlphaUnitsFromName(const std::string &name);

// alpha(v) = 1 / (1 + exp(beta * (midpoint - v))), strictly increasing in v,
// exactly 0.5 at the midpoint.
struct CombinationSchedule {
  double midpoint = 0.0;
  double beta = 1.0;
  AlphaUnits units = AlphaUnits::kDb;
};

double AlphaAt(const CombinationSchedule &schedule, double value);

// The schedule argument for a noise condition in the schedule's units.
// QUIET maps to the alpha -> 0 limit in dB units and to sigma^2 = 0 in
// linear units.
double ConditionValue(const CombinationSchedule &schedule, SnrCondition cond);
double AlphaForCondition(const CombinationSchedule &schedule, SnrCondition cond);

// Raw convex combination of per-class log-likelihoods, or the
// dimension-normalised variant where each stream is divided by its declared
// representation dimension first.
enum class CombineMode { kRaw, kDimNormalized };

std::vector<double> CombineLogLiks(std::span<const double> cep,
                                   std::span<const double> wave, double alpha,
                                   CombineMode mode = CombineMode::kRaw,
                                   double d_cep = 1.0, double d_wave = 1.0);

}  // namespace waveclass

#endif  // WAVECLASS_CLASSIFIER_COMBINE_H_
