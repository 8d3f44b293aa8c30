// classifier/alpha-fit.h

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

#ifndef WAVECLASS_CLASSIFIER_ALPHA_FIT_H_
#define WAVECLASS_CLASSIFIER_ALPHA_FIT_H_

#include <map>
#include <string>
#include <vector>

#include "classifier/combine.h"
#include "classifier/score-dump.h"
#include "corpus/class-map.h"

namespace waveclass {

struct AlphaBand {
  SnrCondition condition;
  double lo = 0.0;          // smallest alpha within tolerance of the best
  double hi = 1.0;          // largest such alpha
  double mid = 0.5;
  double best_error = 0.0;  // error of the per-condition best alpha
  double fitted_alpha = 0.0;
  double fitted_error = 0.0;
};

struct AlphaFitResult {
  CombinationSchedule schedule;
  std::vector<AlphaBand> bands;
};

struct AlphaFitOptions {
  AlphaUnits units = AlphaUnits::kDb;
  CombineMode mode = CombineMode::kRaw;
  double d_cep = 1.0;
  double d_wave = 1.0;
  // A band collects every alpha whose error is within this absolute margin
  // of the per-condition best.
  double band_tolerance = 0.02;
  int alpha_grid = 101;  // 0, 0.01, ..., 1
};

// Classification error of the alpha-combined streams on one condition's
// dumped scores, scored at the 39-group level.
double CombinedError(const ScoreDump &cep, const ScoreDump &wave, double alpha,
                     const std::map<std::string, double> &priors,
                     const ClassMap &map, CombineMode mode, double d_cep,
                     double d_wave);

// Grid-searches alpha per condition, keeps the band within the tolerance of
// the per-condition best, then least-squares fits the sigmoid through the
// band midpoints.  Quiet is excluded from the fit in dB units (its argument
// is the -infinity limit) but still reported in the bands.
AlphaFitResult FitAlphaSchedule(const std::vector<ScoreDump> &cep_dumps,
                                const std::vector<ScoreDump> &wave_dumps,
                                const std::map<std::string, double> &priors,
                                const ClassMap &map,
                                const AlphaFitOptions &options = {});

void SaveSchedule(const AlphaFitResult &result, const std::string &path,
                  const std::string &config_hash, uint64_t seed);
AlphaFitResult LoadSchedule(const std::string &path);

}  // namespace waveclass

#endif  // WAVECLASS_CLASSIFIER_ALPHA_FIT_H_
