// density/em.cc

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

#include "density/em.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "base/error.h"
#include "base/math-util.h"
#include "base/rng.h"

namespace waveclass {

namespace {

std::atomic<uint64_t> g_em_invocations{0};

constexpr double kAbsVarFloor = 1e-20;

struct GlobalStats {
  std::vector<double> mean;
  std::vector<double> var;         // about the mean (or origin if zero_mean)
  std::vector<double> var_floor;
};

GlobalStats ComputeGlobalStats(const DataView &data, bool zero_mean,
                               double floor_fraction) {
  GlobalStats g;
  g.mean.assign(data.d, 0.0);
  g.var.assign(data.d, 0.0);
  if (!zero_mean) {
    for (int64_t i = 0; i < data.n; ++i) {
      auto row = data.Row(i);
      for (int j = 0; j < data.d; ++j) g.mean[j] += row[j];
    }
    for (int j = 0; j < data.d; ++j) g.mean[j] /= static_cast<double>(data.n);
  }
  for (int64_t i = 0; i < data.n; ++i) {
    auto row = data.Row(i);
    for (int j = 0; j < data.d; ++j) {
      double d = row[j] - g.mean[j];
      g.var[j] += d * d;
    }
  }
  g.var_floor.resize(data.d);
  for (int j = 0; j < data.d; ++j) {
    g.var[j] = std::max(g.var[j] / static_cast<double>(data.n), kAbsVarFloor);
    g.var_floor[j] = std::max(floor_fraction * g.var[j], kAbsVarFloor);
  }
  return g;
}

// k-means++ seed selection on a subsample; returns indices into the data.
std::vector<int64_t> KmeansPlusPlusSeeds(const DataView &data, int c, Rng &rng) {
  int64_t m = std::min<int64_t>(data.n, std::max<int64_t>(2000, 20L * c));
  std::vector<int64_t> pool(m);
  if (m == data.n) {
    for (int64_t i = 0; i < m; ++i) pool[i] = i;
  } else {
    for (int64_t i = 0; i < m; ++i) pool[i] = rng.UniformInt(data.n);
  }
  std::vector<int64_t> seeds;
  seeds.push_back(pool[rng.UniformInt(m)]);
  std::vector<double> dist2(m, std::numeric_limits<double>::max());
  while (static_cast<int>(seeds.size()) < c) {
    auto last = data.Row(seeds.back());
    double total = 0.0;
    for (int64_t i = 0; i < m; ++i) {
      auto row = data.Row(pool[i]);
      double d2 = 0.0;
      for (int j = 0; j < data.d; ++j) {
        double d = row[j] - last[j];
        d2 += d * d;
      }
      dist2[i] = std::min(dist2[i], d2);
      total += dist2[i];
    }
    if (total <= 0.0) {
      seeds.push_back(pool[rng.UniformInt(m)]);
      continue;
    }
    double target = rng.Uniform() * total;
    double acc = 0.0;
    int64_t chosen = m - 1;
    for (int64_t i = 0; i < m; ++i) {
      acc += dist2[i];
      if (acc >= target) {
        chosen = i;
        break;
      }
    }
    seeds.push_back(pool[chosen]);
  }
  return seeds;
}

DiagGmm ClosedFormSingle(const DataView &data, bool zero_mean,
                         const std::string &basis, const GlobalStats &g) {
  DiagGaussianComponent comp;
  comp.weight = 1.0;
  comp.mean.assign(data.d, 0.0);
  comp.var.assign(data.d, 0.0);
  if (!zero_mean) comp.mean = g.mean;
  for (int64_t i = 0; i < data.n; ++i) {
    auto row = data.Row(i);
    for (int j = 0; j < data.d; ++j) {
      double d = row[j] - comp.mean[j];
      comp.var[j] += d * d;
    }
  }
  for (int j = 0; j < data.d; ++j)
    comp.var[j] = std::max(comp.var[j] / static_cast<double>(data.n),
                           g.var_floor[j]);
  return DiagGmm({comp}, basis, zero_mean);
}

}  // namespace

uint64_t EmTrainInvocations() { return g_em_invocations.load(); }

DiagGmm EmTrain(const DataView &data, int c, bool zero_mean, uint64_t seed,
                const std::string &basis, const EmOptions &options,
                EmLog *log) {
  g_em_invocations.fetch_add(1);
  if (c < 1) throw ValidationError("EmTrain: need at least one component");
  if (data.d < 1 || data.n <= 0) throw ValidationError("EmTrain: empty data");
  if (data.n < 5L * c)
    throw ValidationError("EmTrain: need at least 5 points per component");

  const int d = data.d;
  const int64_t n = data.n;
  Rng rng(seed);
  GlobalStats global = ComputeGlobalStats(data, zero_mean, options.var_floor_fraction);

  if (c == 1) {
    DiagGmm model = ClosedFormSingle(data, zero_mean, basis, global);
    if (log) {
      double ll = 0.0;
      for (int64_t i = 0; i < n; ++i) ll += model.LogLikelihood(data.Row(i));
      log->avg_loglik.push_back(ll / static_cast<double>(n));
    }
    return model;
  }

  // Working parameters, flattened c x d.
  std::vector<double> weights(c, 1.0 / c);
  std::vector<double> means(static_cast<size_t>(c) * d, 0.0);
  std::vector<double> vars(static_cast<size_t>(c) * d);

  if (zero_mean) {
    for (int i = 0; i < c; ++i) {
      double expo = c == 1 ? 0.0 : (2.0 * i - (c - 1)) / (c - 1);
      double factor = std::pow(2.0, expo);
      for (int j = 0; j < d; ++j)
        vars[static_cast<size_t>(i) * d + j] =
            std::max(global.var[j] * factor, global.var_floor[j]);
    }
  } else {
    std::vector<int64_t> seeds = KmeansPlusPlusSeeds(data, c, rng);
    for (int i = 0; i < c; ++i) {
      auto row = data.Row(seeds[i]);
      for (int j = 0; j < d; ++j) {
        means[static_cast<size_t>(i) * d + j] = row[j];
        vars[static_cast<size_t>(i) * d + j] = global.var[j];
      }
    }
  }

  std::vector<double> log_const(c), inv_var(static_cast<size_t>(c) * d);
  auto refresh = [&]() {
    for (int i = 0; i < c; ++i) {
      double log_det = 0.0;
      for (int j = 0; j < d; ++j) {
        double v = vars[static_cast<size_t>(i) * d + j];
        log_det += std::log(v);
        inv_var[static_cast<size_t>(i) * d + j] = 1.0 / v;
      }
      log_const[i] = std::log(weights[i]) - 0.5 * d * kLog2Pi - 0.5 * log_det;
    }
  };

  std::vector<double> acc_w(c), acc_x(static_cast<size_t>(c) * d),
      acc_x2(static_cast<size_t>(c) * d), terms(c);
  int reseeds = 0;
  double prev_avg_ll = -std::numeric_limits<double>::infinity();
  bool prev_valid = false;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    refresh();
    std::fill(acc_w.begin(), acc_w.end(), 0.0);
    std::fill(acc_x.begin(), acc_x.end(), 0.0);
    std::fill(acc_x2.begin(), acc_x2.end(), 0.0);
    double total_ll = 0.0;

    for (int64_t p = 0; p < n; ++p) {
      auto row = data.Row(p);
      for (int i = 0; i < c; ++i) {
        const double *iv = inv_var.data() + static_cast<size_t>(i) * d;
        const double *mu = means.data() + static_cast<size_t>(i) * d;
        double quad = 0.0;
        if (zero_mean) {
          for (int j = 0; j < d; ++j) quad += row[j] * row[j] * iv[j];
        } else {
          for (int j = 0; j < d; ++j) {
            double diff = row[j] - mu[j];
            quad += diff * diff * iv[j];
          }
        }
        terms[i] = log_const[i] - 0.5 * quad;
      }
      double lse = LogSumExp(terms);
      total_ll += lse;
      for (int i = 0; i < c; ++i) {
        double r = std::exp(terms[i] - lse);
        if (r == 0.0) continue;
        acc_w[i] += r;
        double *ax = acc_x.data() + static_cast<size_t>(i) * d;
        double *ax2 = acc_x2.data() + static_cast<size_t>(i) * d;
        for (int j = 0; j < d; ++j) {
          double v = row[j];
          ax[j] += r * v;
          ax2[j] += r * v * v;
        }
      }
    }

    double avg_ll = total_ll / static_cast<double>(n);
    if (log) log->avg_loglik.push_back(avg_ll);

    if (prev_valid) {
      double improvement = avg_ll - prev_avg_ll;
      if (improvement / std::max(1.0, std::abs(prev_avg_ll)) <
          options.rel_tolerance)
        break;
    }
    prev_avg_ll = avg_ll;
    prev_valid = true;

    // M-step with collapse handling.
    bool reseeded = false;
    for (int i = 0; i < c; ++i) {
      double *mu = means.data() + static_cast<size_t>(i) * d;
      double *var = vars.data() + static_cast<size_t>(i) * d;
      if (acc_w[i] < 1.0 / static_cast<double>(n)) {
        if (++reseeds > options.max_reseeds)
          throw TrainingError("EmTrain: persistent component collapse");
        if (log) log->reseed_iterations.push_back(iter);
        int64_t pick = rng.UniformInt(n);
        auto row = data.Row(pick);
        for (int j = 0; j < d; ++j) {
          if (zero_mean) {
            mu[j] = 0.0;
            var[j] = std::max(row[j] * row[j], global.var_floor[j]);
          } else {
            mu[j] = row[j];
            var[j] = global.var[j];
          }
        }
        weights[i] = 1.0 / static_cast<double>(n);
        reseeded = true;
        continue;
      }
      weights[i] = acc_w[i] / static_cast<double>(n);
      const double *ax = acc_x.data() + static_cast<size_t>(i) * d;
      const double *ax2 = acc_x2.data() + static_cast<size_t>(i) * d;
      for (int j = 0; j < d; ++j) {
        double m = zero_mean ? 0.0 : ax[j] / acc_w[i];
        mu[j] = m;
        var[j] = std::max(ax2[j] / acc_w[i] - m * m, global.var_floor[j]);
      }
    }
    if (reseeded) {
      double sum = 0.0;
      for (double w : weights) sum += w;
      for (double &w : weights) w /= sum;
      // The likelihood may drop across a reseed; restart the baseline.
      prev_valid = false;
    }
  }

  std::vector<DiagGaussianComponent> components(c);
  for (int i = 0; i < c; ++i) {
    components[i].weight = weights[i];
    components[i].mean.assign(means.begin() + static_cast<int64_t>(i) * d,
                              means.begin() + static_cast<int64_t>(i + 1) * d);
    components[i].var.assign(vars.begin() + static_cast<int64_t>(i) * d,
                             vars.begin() + static_cast<int64_t>(i + 1) * d);
  }
  // Weights can drift from 1 by rounding across many M-steps.
  double sum = 0.0;
  for (const auto &comp : components) sum += comp.weight;
  for (auto &comp : components) comp.weight /= sum;
  return DiagGmm(std::move(components), basis, zero_mean);
}

}  // namespace waveclass
