// corpus/manifest.h

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

#ifndef WAVECLASS_CORPUS_MANIFEST_H_
#define WAVECLASS_CORPUS_MANIFEST_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "corpus/class-map.h"
#include "corpus/phn.h"

namespace waveclass {

// One retained phone occurrence.  center = floor((start+end)/2) + shift;
// shift is zero for originals and the temporal offset for augmented copies.
struct PhonemeInstance {
  std::string sentence_id;
  PhonemeInterval interval;
  std::string group48;
  int64_t center = 0;
  int64_t shift = 0;
};

struct LabeledSentence {
  std::string sentence_id;
  int64_t num_samples = 0;
  std::vector<PhonemeInterval> intervals;
};

struct CorpusManifest {
  std::string split;  // "train" or "test"
  std::vector<PhonemeInstance> instances;
  // Relative class frequencies from un-augmented counts; sum to 1.
  std::map<std::string, double> priors;
  std::map<std::string, int64_t> sentence_samples;
  std::string config_hash;
  uint64_t seed = 0;

  std::map<std::string, int64_t> CountsByGroup() const;
};

// Drops REMOVED labels, computes centers and priors.  A sentence with no
// retained phones only warns.  Unknown labels throw (ClassMap contract).
CorpusManifest ExtractInstances(const std::vector<LabeledSentence> &sentences,
                                const ClassMap &map, const std::string &split,
                                std::ostream *warnings = nullptr);

// Adds one shifted copy per original per shift for every group below the
// count threshold.  Training split only; shifts must exclude zero; priors are
// carried over unchanged.  Copies whose shifted center leaves the sentence
// are skipped with a warning.
CorpusManifest AugmentSmallClasses(const CorpusManifest &manifest,
                                   int64_t threshold,
                                   const std::vector<int64_t> &shifts,
                                   std::ostream *warnings = nullptr);

void SaveManifest(const CorpusManifest &manifest, const std::string &path);
CorpusManifest LoadManifest(const std::string &path);

// Interval-duration statistics per group, over un-augmented instances.  The
// spread of these numbers is what motivates averaging over several window
// lengths instead of fixing one.
struct DurationStats {
  int64_t count = 0;
  double min_ms = 0.0;
  double mean_ms = 0.0;
  double std_ms = 0.0;
  double max_ms = 0.0;
};

std::map<std::string, DurationStats> GroupDurationStats(
    const CorpusManifest &manifest, double rate = 16000.0);

std::string FormatDurationStats(
    const std::map<std::string, DurationStats> &stats);

}  // namespace waveclass

#endif  // WAVECLASS_CORPUS_MANIFEST_H_
