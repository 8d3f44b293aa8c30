// classifier/alpha-fit.cc

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

#include "classifier/alpha-fit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "base/error.h"
#include "base/text-io.h"
#include "classifier/rules.h"

namespace waveclass {

namespace {

void CheckAligned(const ScoreDump &cep, const ScoreDump &wave) {
  if (cep.classes != wave.classes)
    throw ConfigError("score dumps disagree on the class order");
  if (cep.instance_ids != wave.instance_ids)
    throw ConfigError("score dumps disagree on the instance set");
  if (cep.condition != wave.condition)
    throw ConfigError("score dumps disagree on the condition");
}

}  // namespace

double CombinedError(const ScoreDump &cep, const ScoreDump &wave, double alpha,
                     const std::map<std::string, double> &priors,
                     const ClassMap &map, CombineMode mode, double d_cep,
                     double d_wave) {
  CheckAligned(cep, wave);
  std::vector<double> aligned_priors = AlignedPriors(priors, cep.classes);
  int64_t wrong = 0;
  for (size_t i = 0; i < cep.instance_ids.size(); ++i) {
    std::vector<double> combined = CombineLogLiks(
        cep.scores[i], wave.scores[i], alpha, mode, d_cep, d_wave);
    Prediction pred = Predict(combined, aligned_priors, cep.classes);
    if (map.Fold39(pred.class_id) != map.Fold39(cep.truths[i])) ++wrong;
  }
  return static_cast<double>(wrong) /
         static_cast<double>(cep.instance_ids.size());
}

AlphaFitResult FitAlphaSchedule(const std::vector<ScoreDump> &cep_dumps,
                                const std::vector<ScoreDump> &wave_dumps,
                                const std::map<std::string, double> &priors,
                                const ClassMap &map,
                                const AlphaFitOptions &options) {
  if (cep_dumps.empty() || cep_dumps.size() != wave_dumps.size())
    throw ConfigError("FitAlphaSchedule: need aligned dumps per condition");

  AlphaFitResult result;
  result.schedule.units = options.units;

  for (size_t ci = 0; ci < cep_dumps.size(); ++ci) {
    const ScoreDump &cep = cep_dumps[ci];
    const ScoreDump &wave = wave_dumps[ci];
    AlphaBand band;
    band.condition = ParseCondition(cep.condition);

    std::vector<double> errors(options.alpha_grid);
    double best = std::numeric_limits<double>::max();
    for (int g = 0; g < options.alpha_grid; ++g) {
      double alpha = static_cast<double>(g) / (options.alpha_grid - 1);
      errors[g] = CombinedError(cep, wave, alpha, priors, map, options.mode,
                                options.d_cep, options.d_wave);
      best = std::min(best, errors[g]);
    }
    band.best_error = best;
    band.lo = 1.0;
    band.hi = 0.0;
    for (int g = 0; g < options.alpha_grid; ++g) {
      double alpha = static_cast<double>(g) / (options.alpha_grid - 1);
      if (errors[g] <= best + options.band_tolerance) {
        band.lo = std::min(band.lo, alpha);
        band.hi = std::max(band.hi, alpha);
      }
    }
    band.mid = 0.5 * (band.lo + band.hi);
    result.bands.push_back(band);
  }

  // Grid search over (midpoint, beta): candidates are ranked first by how
  // far the curve leaves the per-condition bands (the fit must stay within
  // tolerance of the per-condition best wherever possible), then by the
  // least-squares distance to the band midpoints.  Quiet enters the band
  // penalty through its alpha limit but has no finite dB argument for the
  // midpoint term.
  std::vector<double> values, targets;
  double vmin = 1e30, vmax = -1e30;
  CombinationSchedule units_probe{0.0, 1.0, options.units};
  for (const AlphaBand &band : result.bands) {
    double v = ConditionValue(units_probe, band.condition);
    if (std::isinf(v)) continue;
    values.push_back(v);
    targets.push_back(band.mid);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  if (values.empty())
    throw ConfigError("FitAlphaSchedule: no finite conditions to fit");
  if (vmin == vmax) {
    vmin -= 1.0;
    vmax += 1.0;
  }

  double best_violation = std::numeric_limits<double>::max();
  double best_sse = std::numeric_limits<double>::max();
  double span = vmax - vmin;
  for (double mid = vmin - 0.5 * span; mid <= vmax + 0.5 * span;
       mid += span / 200.0) {
    for (double beta = 0.02; beta <= 3.0; beta += 0.02) {
      CombinationSchedule s{mid, beta, options.units};
      double violation = 0.0;
      for (const AlphaBand &band : result.bands) {
        double alpha = AlphaForCondition(s, band.condition);
        double outside = std::max({0.0, band.lo - alpha, alpha - band.hi});
        violation += outside * outside;
      }
      double sse = 0.0;
      for (size_t i = 0; i < values.size(); ++i) {
        double d = AlphaAt(s, values[i]) - targets[i];
        sse += d * d;
      }
      if (violation < best_violation - 1e-15 ||
          (violation < best_violation + 1e-15 && sse < best_sse)) {
        best_violation = violation;
        best_sse = sse;
        result.schedule.midpoint = mid;
        result.schedule.beta = beta;
      }
    }
  }

  for (AlphaBand &band : result.bands) {
    band.fitted_alpha = AlphaForCondition(result.schedule, band.condition);
    size_t ci = static_cast<size_t>(&band - result.bands.data());
    band.fitted_error =
        CombinedError(cep_dumps[ci], wave_dumps[ci], band.fitted_alpha, priors,
                      map, options.mode, options.d_cep, options.d_wave);
  }
  return result;
}

void SaveSchedule(const AlphaFitResult &result, const std::string &path,
                  const std::string &config_hash, uint64_t seed) {
  std::ostringstream out;
  out << "waveclass-alpha-schedule 1\n";
  out << "config_hash " << (config_hash.empty() ? "-" : config_hash) << " seed "
      << seed << "\n";
  out << "units " << AlphaUnitsName(result.schedule.units) << " midpoint "
      << FormatDouble(result.schedule.midpoint) << " beta "
      << FormatDouble(result.schedule.beta) << "\n";
  out << "bands " << result.bands.size() << "\n";
  for (const AlphaBand &band : result.bands) {
    out << "band " << band.condition.Name() << " " << FormatDouble(band.lo)
        << " " << FormatDouble(band.hi) << " " << FormatDouble(band.mid) << " "
        << FormatDouble(band.best_error) << " "
        << FormatDouble(band.fitted_alpha) << " "
        << FormatDouble(band.fitted_error) << "\n";
  }
  out << "end\n";
  WriteFile(path, out.str());
}

AlphaFitResult LoadSchedule(const std::string &path) {
  std::vector<std::string> lines = ReadFileLines(path);
  size_t li = 0;
  auto next = [&]() -> std::vector<std::string> {
    while (li < lines.size()) {
      auto tokens = SplitTokens(lines[li]);
      ++li;
      if (!tokens.empty()) return tokens;
    }
    throw ParseError("unexpected end of schedule file: " + path);
  };
  auto header = next();
  if (header.size() != 2 || header[0] != "waveclass-alpha-schedule")
    throw ParseError("not a schedule file: " + path);
  next();  // config_hash line (provenance only)
  auto units = next();
  if (units.size() != 6 || units[0] != "units")
    throw ParseError("bad schedule units line: " + path);
  AlphaFitResult result;
  result.schedule.units = AlphaUnitsFromName(units[1]);
  result.schedule.midpoint = ParseDouble(units[3], path);
  result.schedule.beta = ParseDouble(units[5], path);
  auto nbands = next();
  if (nbands.size() != 2 || nbands[0] != "bands")
    throw ParseError("bad schedule bands line: " + path);
  int64_t n = ParseInt(nbands[1], path);
  for (int64_t i = 0; i < n; ++i) {
    auto tokens = next();
    if (tokens.size() != 8 || tokens[0] != "band")
      throw ParseError("bad band record: " + path);
    AlphaBand band;
    band.condition = ParseCondition(tokens[1]);
    band.lo = ParseDouble(tokens[2], path);
    band.hi = ParseDouble(tokens[3], path);
    band.mid = ParseDouble(tokens[4], path);
    band.best_error = ParseDouble(tokens[5], path);
    band.fitted_alpha = ParseDouble(tokens[6], path);
    band.fitted_error = ParseDouble(tokens[7], path);
    result.bands.push_back(band);
  }
  return result;
}

}  // namespace waveclass
