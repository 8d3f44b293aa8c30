// frontend/external-features.h

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

#ifndef WAVECLASS_FRONTEND_EXTERNAL_FEATURES_H_
#define WAVECLASS_FRONTEND_EXTERNAL_FEATURES_H_

#include <string>

#include "frontend/feature-matrix.h"

namespace waveclass {

// One file per sentence: a header line "dim hop_seconds width_seconds", then
// one whitespace-separated frame per line.  Lines starting with '#' are
// ignored (the cache writer records provenance there).
FeatureMatrix ReadFeatureFile(const std::string &path, FeatureBasis basis,
                              double rate = 16000.0);

void WriteFeatureFile(const std::string &path, const FeatureMatrix &features,
                      const std::string &provenance = "");

}  // namespace waveclass

#endif  // WAVECLASS_FRONTEND_EXTERNAL_FEATURES_H_
