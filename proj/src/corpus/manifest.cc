// corpus/manifest.cc

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

#include "corpus/manifest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "base/error.h"
#include "base/text-io.h"

namespace waveclass {

std::map<std::string, int64_t> CorpusManifest::CountsByGroup() const {
  std::map<std::string, int64_t> counts;
  for (const auto &inst : instances) ++counts[inst.group48];
  return counts;
}

CorpusManifest ExtractInstances(const std::vector<LabeledSentence> &sentences,
                                const ClassMap &map, const std::string &split,
                                std::ostream *warnings) {
  if (split != "train" && split != "test")
    throw ValidationError("split must be 'train' or 'test', got: " + split);
  CorpusManifest manifest;
  manifest.split = split;
  std::map<std::string, int64_t> counts;
  for (const auto &sentence : sentences) {
    if (sentence.sentence_id.find_first_of(" \t\n") != std::string::npos)
      throw ValidationError("sentence id contains whitespace: " +
                            sentence.sentence_id);
    manifest.sentence_samples[sentence.sentence_id] = sentence.num_samples;
    int64_t retained = 0;
    for (const auto &iv : sentence.intervals) {
      std::string group = map.MapLabel(iv.label, FoldLevel::k48);
      if (group == ClassMap::kRemoved) continue;
      PhonemeInstance inst;
      inst.sentence_id = sentence.sentence_id;
      inst.interval = iv;
      inst.group48 = group;
      inst.center = (iv.start + iv.end) / 2;
      inst.shift = 0;
      if (inst.center < 0 || inst.center >= sentence.num_samples)
        throw ValidationError("phone center outside sentence " +
                              sentence.sentence_id);
      manifest.instances.push_back(std::move(inst));
      ++counts[group];
      ++retained;
    }
    if (retained == 0 && warnings)
      *warnings << "warning: sentence " << sentence.sentence_id
                << " has no retained phones\n";
  }
  int64_t total = 0;
  for (const auto &[g, c] : counts) total += c;
  if (total > 0) {
    for (const auto &[g, c] : counts)
      manifest.priors[g] = static_cast<double>(c) / static_cast<double>(total);
  }
  return manifest;
}

CorpusManifest AugmentSmallClasses(const CorpusManifest &manifest,
                                   int64_t threshold,
                                   const std::vector<int64_t> &shifts,
                                   std::ostream *warnings) {
  if (manifest.split != "train")
    throw ValidationError("augmentation applies to the training split only");
  for (int64_t s : shifts)
    if (s == 0) throw ValidationError("shift list must exclude 0");

  CorpusManifest out = manifest;
  if (shifts.empty()) return out;
  std::map<std::string, int64_t> counts = manifest.CountsByGroup();
  for (const auto &inst : manifest.instances) {
    if (counts.at(inst.group48) >= threshold) continue;
    int64_t sentence_len = manifest.sentence_samples.at(inst.sentence_id);
    for (int64_t shift : shifts) {
      PhonemeInstance copy = inst;
      copy.shift = shift;
      copy.center = inst.center + shift;
      if (copy.center < 0 || copy.center >= sentence_len) {
        if (warnings)
          *warnings << "warning: shifted copy of " << inst.sentence_id << " ["
                    << inst.interval.start << "," << inst.interval.end
                    << ") by " << shift << " leaves the sentence, skipped\n";
        continue;
      }
      out.instances.push_back(std::move(copy));
    }
  }
  return out;
}

void SaveManifest(const CorpusManifest &manifest, const std::string &path) {
  std::ostringstream out;
  out << "waveclass-manifest 1\n";
  out << "config_hash " << (manifest.config_hash.empty() ? "-" : manifest.config_hash)
      << " seed " << manifest.seed << "\n";
  out << "split " << manifest.split << "\n";
  out << "sentences " << manifest.sentence_samples.size() << "\n";
  for (const auto &[id, n] : manifest.sentence_samples)
    out << "sentence " << id << " " << n << "\n";
  out << "priors " << manifest.priors.size() << "\n";
  for (const auto &[g, p] : manifest.priors)
    out << "prior " << g << " " << FormatDouble(p) << "\n";
  out << "instances " << manifest.instances.size() << "\n";
  for (const auto &inst : manifest.instances) {
    out << "instance " << inst.sentence_id << " " << inst.interval.start << " "
        << inst.interval.end << " " << inst.interval.label << " "
        << inst.group48 << " " << inst.center << " " << inst.shift << "\n";
  }
  out << "end\n";
  WriteFile(path, out.str());
}

std::map<std::string, DurationStats> GroupDurationStats(
    const CorpusManifest &manifest, double rate) {
  std::map<std::string, std::vector<double>> durations;
  for (const auto &inst : manifest.instances) {
    if (inst.shift != 0) continue;  // originals only
    durations[inst.group48].push_back(inst.interval.Duration() * 1000.0 / rate);
  }
  std::map<std::string, DurationStats> out;
  for (const auto &[group, values] : durations) {
    DurationStats s;
    s.count = static_cast<int64_t>(values.size());
    s.min_ms = *std::min_element(values.begin(), values.end());
    s.max_ms = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean_ms = sum / values.size();
    double var = 0.0;
    for (double v : values) var += (v - s.mean_ms) * (v - s.mean_ms);
    s.std_ms = std::sqrt(var / values.size());
    out[group] = s;
  }
  return out;
}

std::string FormatDurationStats(
    const std::map<std::string, DurationStats> &stats) {
  std::ostringstream out;
  out << "group count min_ms mean_ms std_ms max_ms\n";
  char buf[128];
  for (const auto &[group, s] : stats) {
    std::snprintf(buf, sizeof(buf), " %lld %.1f %.1f %.1f %.1f\n",
                  static_cast<long long>(s.count), s.min_ms, s.mean_ms,
                  s.std_ms, s.max_ms);
    out << group << buf;
  }
  return out.str();
}

CorpusManifest LoadManifest(const std::string &path) {
  std::vector<std::string> lines = ReadFileLines(path);
  size_t i = 0;
  auto next = [&]() -> std::vector<std::string> {
    while (i < lines.size()) {
      auto tokens = SplitTokens(lines[i]);
      ++i;
      if (!tokens.empty()) return tokens;
    }
    throw ParseError("unexpected end of manifest: " + path);
  };
  auto expect = [&](const std::vector<std::string> &tokens, const char *tag,
                    size_t n) {
    if (tokens.empty() || tokens[0] != tag || tokens.size() != n)
      throw ParseError(std::string("expected '") + tag + "' record (" + path +
                       ")");
  };

  auto header = next();
  if (header.size() != 2 || header[0] != "waveclass-manifest" || header[1] != "1")
    throw ParseError("not a waveclass manifest: " + path);

  CorpusManifest manifest;
  auto meta = next();
  expect(meta, "config_hash", 4);
  manifest.config_hash = meta[1] == "-" ? "" : meta[1];
  manifest.seed = static_cast<uint64_t>(ParseInt(meta[3], path));

  auto split = next();
  expect(split, "split", 2);
  manifest.split = split[1];

  auto nsent = next();
  expect(nsent, "sentences", 2);
  int64_t sentence_count = ParseInt(nsent[1], path);
  for (int64_t s = 0; s < sentence_count; ++s) {
    auto tokens = next();
    expect(tokens, "sentence", 3);
    manifest.sentence_samples[tokens[1]] = ParseInt(tokens[2], path);
  }

  auto npriors = next();
  expect(npriors, "priors", 2);
  int64_t prior_count = ParseInt(npriors[1], path);
  for (int64_t p = 0; p < prior_count; ++p) {
    auto tokens = next();
    expect(tokens, "prior", 3);
    manifest.priors[tokens[1]] = ParseDouble(tokens[2], path);
  }

  auto ninst = next();
  expect(ninst, "instances", 2);
  int64_t instance_count = ParseInt(ninst[1], path);
  manifest.instances.reserve(instance_count);
  for (int64_t n = 0; n < instance_count; ++n) {
    auto tokens = next();
    expect(tokens, "instance", 8);
    PhonemeInstance inst;
    inst.sentence_id = tokens[1];
    inst.interval.start = ParseInt(tokens[2], path);
    inst.interval.end = ParseInt(tokens[3], path);
    inst.interval.label = tokens[4];
    inst.group48 = tokens[5];
    inst.center = ParseInt(tokens[6], path);
    inst.shift = ParseInt(tokens[7], path);
    if (inst.center !=
        (inst.interval.start + inst.interval.end) / 2 + inst.shift)
      throw ValidationError("instance center does not match its interval (" +
                            path + ")");
    auto sentence = manifest.sentence_samples.find(inst.sentence_id);
    if (sentence == manifest.sentence_samples.end())
      throw ValidationError("instance references unknown sentence " +
                            inst.sentence_id + " (" + path + ")");
    if (inst.center < 0 || inst.center >= sentence->second)
      throw ValidationError("instance center outside its sentence (" + path +
                            ")");
    manifest.instances.push_back(std::move(inst));
  }
  auto tail = next();
  expect(tail, "end", 1);
  return manifest;
}

}  // namespace waveclass
