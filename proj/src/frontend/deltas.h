// frontend/deltas.h

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

#ifndef WAVECLASS_FRONTEND_DELTAS_H_
#define WAVECLASS_FRONTEND_DELTAS_H_

#include "frontend/feature-matrix.h"

namespace waveclass {

// Two-sided regression deltas with window +-2 and edge replication; the
// delta-delta track applies the same operator to the deltas.  Output frames
// are [static, delta, delta-delta], tripling the dimension.
FeatureMatrix AppendDeltas(const FeatureMatrix &features);

}  // namespace waveclass

#endif  // WAVECLASS_FRONTEND_DELTAS_H_
