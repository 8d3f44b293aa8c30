// classifier/anchors.cc

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

#include "classifier/anchors.h"

#include <cmath>

#include "base/error.h"

namespace waveclass {

std::array<int64_t, 5> AnchorPoints(const PhonemeInterval &interval) {
  if (interval.start >= interval.end)
    throw ValidationError("AnchorPoints: empty interval");
  double dur = static_cast<double>(interval.Duration());
  auto at = [&](double frac) {
    return interval.start + static_cast<int64_t>(std::llround(frac * dur));
  };
  return {interval.start, at(1.0 / 6.0), at(0.5), at(5.0 / 6.0), interval.end};
}

int64_t AnchorForSector(const PhonemeInterval &interval, char sector) {
  auto anchors = AnchorPoints(interval);
  for (size_t i = 0; i < kSectorNames.size(); ++i)
    if (kSectorNames[i] == sector) return anchors[i];
  throw ValidationError(std::string("unknown sector: ") + sector);
}

}  // namespace waveclass
