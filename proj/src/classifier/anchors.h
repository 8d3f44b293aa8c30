// classifier/anchors.h

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

#ifndef WAVECLASS_CLASSIFIER_ANCHORS_H_
#define WAVECLASS_CLASSIFIER_ANCHORS_H_

#include <array>
#include <cstdint>

#include "corpus/phn.h"

namespace waveclass {

inline constexpr std::array<char, 5> kSectorNames = {'A', 'B', 'C', 'D', 'E'};

// Five anchor instants along the phoneme: A at the start, E at the end, and
// B, C, D at 1/6, 1/2 and 5/6 of the duration (centres of three equal thirds
// plus the two transition midpoints), rounded to the nearest sample.
std::array<int64_t, 5> AnchorPoints(const PhonemeInterval &interval);

int64_t AnchorForSector(const PhonemeInterval &interval, char sector);

}  // namespace waveclass

#endif  // WAVECLASS_CLASSIFIER_ANCHORS_H_
