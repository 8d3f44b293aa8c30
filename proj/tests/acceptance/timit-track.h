// tests/acceptance/timit-track.h

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

#ifndef WAVECLASS_TESTS_ACCEPTANCE_TIMIT_TRACK_H_
#define WAVECLASS_TESTS_ACCEPTANCE_TIMIT_TRACK_H_

#include <string>

namespace waveclass {

// Conditional reproduction protocol.  Requires TIMIT_ROOT (the corpus, SI/SX
// sentences, SPHERE or RIFF audio) and WAVECLASS_PLP_DIR (one 39-dimensional
// feature file per sentence id in the external format).  Throws std::string
// with a skip reason when the inputs are absent; throws CheckFailure-style
// std::runtime_error on criterion violation.  On success returns a summary.
std::string RunTimitTrack(const std::string &data_dir);

}  // namespace waveclass

#endif  // WAVECLASS_TESTS_ACCEPTANCE_TIMIT_TRACK_H_
