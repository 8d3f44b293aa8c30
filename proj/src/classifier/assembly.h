// classifier/assembly.h

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

#ifndef WAVECLASS_CLASSIFIER_ASSEMBLY_H_
#define WAVECLASS_CLASSIFIER_ASSEMBLY_H_

#include <vector>

#include "frontend/feature-matrix.h"

namespace waveclass {

// Concatenates the f consecutive frames whose centres lie nearest the anchor
// (given in samples), in temporal order.  Frames outside the sentence are
// zero-padded in linear bases and edge-replicated in cepstral ones.  Ties in
// the nearest-centre choice take the earlier frame.
std::vector<double> AssembleFrames(const FeatureMatrix &features,
                                   double anchor_sample, int f);

// Index of the frame whose centre is nearest the anchor; may fall outside
// [0, num_frames) for anchors beyond the sentence edge.
int NearestFrameIndex(const FeatureMatrix &features, double anchor_sample);

}  // namespace waveclass

#endif  // WAVECLASS_CLASSIFIER_ASSEMBLY_H_
