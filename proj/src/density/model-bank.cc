// density/model-bank.cc

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

#include "density/model-bank.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "base/error.h"
#include "base/text-io.h"

namespace waveclass {

namespace {
const std::set<int> kAllowedComponentCounts = {1, 2, 4, 8, 16, 32, 64, 128};
}

bool ModelBank::Has(const std::string &cls, char sector, int f, int c) const {
  return models.count({cls, sector, f, c}) > 0;
}

const DiagGmm &ModelBank::Model(const std::string &cls, char sector, int f,
                                int c) const {
  auto it = models.find({cls, sector, f, c});
  if (it == models.end()) {
    std::ostringstream msg;
    msg << "missing model for class " << cls << " sector " << sector << " f="
        << f << " c=" << c;
    throw ConfigError(msg.str());
  }
  return it->second;
}

void ModelBank::Insert(const std::string &cls, char sector, int f, int c,
                       DiagGmm gmm) {
  models[{cls, sector, f, c}] = std::move(gmm);
}

std::vector<double> UniformWeights(size_t n) {
  if (n == 0) throw ConfigError("empty component-count set");
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

const std::vector<double> &ModelBank::WeightsFor(const std::string &cls,
                                                 char sector, int f) const {
  if (!slice_weights.empty()) {
    auto it = slice_weights.find({cls, sector, f});
    if (it != slice_weights.end()) return it->second;
  }
  return component_weights;
}

void ModelBank::Validate() const {
  if (component_counts.empty()) throw ConfigError("empty component-count set");
  for (int c : component_counts)
    if (!kAllowedComponentCounts.count(c))
      throw ValidationError("component count " + std::to_string(c) +
                            " outside {1,2,4,8,16,32,64,128}");
  if (component_weights.size() != component_counts.size())
    throw ValidationError("component weight count mismatch");
  double sum = 0.0;
  for (double u : component_weights) {
    if (u <= 0.0) throw ValidationError("non-positive model weight");
    sum += u;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw ValidationError("model weights must sum to 1");
  if (adapted && static_cast<int>(noise_pattern.size()) != frame_dim)
    throw ValidationError("adapted bank needs a per-frame noise pattern");
  for (const auto &[key, u] : slice_weights) {
    if (u.size() != component_counts.size())
      throw ValidationError("slice weight count mismatch");
    double s = 0.0, largest = 0.0;
    for (double v : u) {
      // Posterior weights may round to exact zero for dominated models.
      if (v < 0.0) throw ValidationError("negative slice weight");
      s += v;
      largest = std::max(largest, v);
    }
    if (largest <= 0.0) throw ValidationError("slice weights all zero");
    if (std::abs(s - 1.0) > 1e-8)
      throw ValidationError("slice weights must sum to 1");
  }
  for (const auto &cls : classes)
    for (char s : sectors)
      for (int f : frame_counts)
        for (int c : component_counts) {
          const DiagGmm &m = Model(cls, s, f, c);
          if (m.Dim() != f * frame_dim)
            throw ValidationError("model dimension mismatch in bank");
          if (m.zero_mean() != zero_mean)
            throw ValidationError("mixed zero-mean constraint in bank");
        }
}

void SaveModelBank(const ModelBank &bank, const std::string &path) {
  std::ostringstream out;
  out << "waveclass-modelbank 1\n";
  out << "config_hash " << (bank.config_hash.empty() ? "-" : bank.config_hash)
      << " seed " << bank.seed << "\n";
  out << "basis " << bank.basis << " frame_dim " << bank.frame_dim
      << " zero_mean " << (bank.zero_mean ? 1 : 0) << "\n";
  out << "classes " << bank.classes.size();
  for (const auto &c : bank.classes) out << " " << c;
  out << "\n";
  out << "sectors " << bank.sectors.size();
  for (char s : bank.sectors) out << " " << s;
  out << "\n";
  out << "frame_counts " << bank.frame_counts.size();
  for (int f : bank.frame_counts) out << " " << f;
  out << "\n";
  out << "component_counts " << bank.component_counts.size();
  for (int c : bank.component_counts) out << " " << c;
  out << "\n";
  out << "component_weights " << bank.component_weights.size();
  for (double u : bank.component_weights) out << " " << FormatDouble(u);
  out << "\n";
  if (bank.adapted) {
    out << "adapted 1 sigma2 " << FormatDouble(bank.sigma2) << " noise_id "
        << bank.noise_id << "\n";
    out << "noise_pattern " << bank.noise_pattern.size();
    for (double v : bank.noise_pattern) out << " " << FormatDouble(v);
    out << "\n";
  } else {
    out << "adapted 0\n";
  }
  out << "slice_weights " << bank.slice_weights.size() << "\n";
  for (const auto &[key, u] : bank.slice_weights) {
    const auto &[cls, sector, f] = key;
    out << "slice " << cls << " " << sector << " " << f;
    for (double v : u) out << " " << FormatDouble(v);
    out << "\n";
  }
  out << "models " << bank.models.size() << "\n";
  for (const auto &[key, gmm] : bank.models) {
    const auto &[cls, sector, f, c] = key;
    out << "model " << cls << " " << sector << " " << f << " " << c
        << " dim " << gmm.Dim() << " zero_mean " << (gmm.zero_mean() ? 1 : 0)
        << " components " << gmm.NumComponents() << "\n";
    for (const auto &comp : gmm.components()) {
      out << "w " << FormatDouble(comp.weight) << "\n";
      out << "mean";
      for (double v : comp.mean) out << " " << FormatDouble(v);
      out << "\n";
      out << "var";
      for (double v : comp.var) out << " " << FormatDouble(v);
      out << "\n";
    }
  }
  out << "end\n";
  WriteFile(path, out.str());
}

ModelBank LoadModelBank(const std::string &path) {
  std::vector<std::string> lines = ReadFileLines(path);
  size_t li = 0;
  auto next = [&]() -> std::vector<std::string> {
    while (li < lines.size()) {
      auto tokens = SplitTokens(lines[li]);
      ++li;
      if (!tokens.empty()) return tokens;
    }
    throw ParseError("unexpected end of model bank: " + path);
  };
  auto expect_tag = [&](const std::vector<std::string> &tokens,
                        const char *tag) {
    if (tokens.empty() || tokens[0] != tag)
      throw ParseError(std::string("expected '") + tag + "' record (" + path +
                       ")");
  };

  auto header = next();
  if (header.size() != 2 || header[0] != "waveclass-modelbank" ||
      header[1] != "1")
    throw ParseError("not a waveclass model bank: " + path);

  ModelBank bank;
  auto meta = next();
  expect_tag(meta, "config_hash");
  bank.config_hash = meta.at(1) == "-" ? "" : meta.at(1);
  bank.seed = static_cast<uint64_t>(ParseInt(meta.at(3), path));

  auto basis = next();
  expect_tag(basis, "basis");
  bank.basis = basis.at(1);
  bank.frame_dim = static_cast<int>(ParseInt(basis.at(3), path));
  bank.zero_mean = ParseInt(basis.at(5), path) != 0;

  auto read_list = [&](const char *tag, auto push) {
    auto tokens = next();
    expect_tag(tokens, tag);
    int64_t n = ParseInt(tokens.at(1), path);
    if (static_cast<int64_t>(tokens.size()) != n + 2)
      throw ParseError(std::string("bad '") + tag + "' count (" + path + ")");
    for (int64_t i = 0; i < n; ++i) push(tokens[2 + i]);
  };
  read_list("classes", [&](const std::string &t) { bank.classes.push_back(t); });
  read_list("sectors", [&](const std::string &t) {
    if (t.size() != 1) throw ParseError("bad sector token (" + path + ")");
    bank.sectors.push_back(t[0]);
  });
  read_list("frame_counts", [&](const std::string &t) {
    bank.frame_counts.push_back(static_cast<int>(ParseInt(t, path)));
  });
  read_list("component_counts", [&](const std::string &t) {
    bank.component_counts.push_back(static_cast<int>(ParseInt(t, path)));
  });
  read_list("component_weights", [&](const std::string &t) {
    bank.component_weights.push_back(ParseDouble(t, path));
  });

  auto adapted = next();
  expect_tag(adapted, "adapted");
  if (ParseInt(adapted.at(1), path) != 0) {
    bank.adapted = true;
    bank.sigma2 = ParseDouble(adapted.at(3), path);
    bank.noise_id = adapted.at(5);
    read_list("noise_pattern", [&](const std::string &t) {
      bank.noise_pattern.push_back(ParseDouble(t, path));
    });
  }

  auto nslices = next();
  expect_tag(nslices, "slice_weights");
  int64_t slice_count = ParseInt(nslices.at(1), path);
  for (int64_t s = 0; s < slice_count; ++s) {
    auto tokens = next();
    expect_tag(tokens, "slice");
    if (tokens.size() < 5) throw ParseError("bad slice record (" + path + ")");
    char sector = tokens[2].size() == 1 ? tokens[2][0] : '\0';
    if (!sector) throw ParseError("bad sector in slice record (" + path + ")");
    int f = static_cast<int>(ParseInt(tokens[3], path));
    std::vector<double> u;
    for (size_t i = 4; i < tokens.size(); ++i)
      u.push_back(ParseDouble(tokens[i], path));
    bank.slice_weights[{tokens[1], sector, f}] = std::move(u);
  }

  auto nmodels = next();
  expect_tag(nmodels, "models");
  int64_t model_count = ParseInt(nmodels.at(1), path);
  for (int64_t m = 0; m < model_count; ++m) {
    auto mh = next();
    expect_tag(mh, "model");
    if (mh.size() != 11) throw ParseError("bad model header (" + path + ")");
    std::string cls = mh[1];
    char sector = mh[2].size() == 1 ? mh[2][0] : '\0';
    if (!sector) throw ParseError("bad sector in model header (" + path + ")");
    int f = static_cast<int>(ParseInt(mh[3], path));
    int c = static_cast<int>(ParseInt(mh[4], path));
    int dim = static_cast<int>(ParseInt(mh[6], path));
    bool zero_mean = ParseInt(mh[8], path) != 0;
    int n_comp = static_cast<int>(ParseInt(mh[10], path));

    std::vector<DiagGaussianComponent> comps(n_comp);
    for (int i = 0; i < n_comp; ++i) {
      auto w = next();
      expect_tag(w, "w");
      comps[i].weight = ParseDouble(w.at(1), path);
      auto mean = next();
      expect_tag(mean, "mean");
      if (static_cast<int>(mean.size()) != dim + 1)
        throw ParseError("bad mean length (" + path + ")");
      comps[i].mean.resize(dim);
      for (int j = 0; j < dim; ++j)
        comps[i].mean[j] = ParseDouble(mean[1 + j], path);
      auto var = next();
      expect_tag(var, "var");
      if (static_cast<int>(var.size()) != dim + 1)
        throw ParseError("bad var length (" + path + ")");
      comps[i].var.resize(dim);
      for (int j = 0; j < dim; ++j)
        comps[i].var[j] = ParseDouble(var[1 + j], path);
    }
    bank.Insert(cls, sector, f, c, DiagGmm(std::move(comps), bank.basis, zero_mean));
  }
  auto tail = next();
  expect_tag(tail, "end");
  bank.Validate();
  return bank;
}

}  // namespace waveclass
