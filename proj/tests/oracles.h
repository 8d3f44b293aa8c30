// tests/oracles.h

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

// Independent reference computations used only by tests.  Everything here is
// deliberately written the slow, obvious way (direct summation in extended
// precision, explicit matrices) so it shares no code path with the library.

#ifndef WAVECLASS_TESTS_ORACLES_H_
#define WAVECLASS_TESTS_ORACLES_H_

#include <array>
#include <span>
#include <vector>

#include "density/diag-gmm.h"

namespace waveclass {
namespace oracle {

// Direct summation of the mixture density in long double, then log.  Only
// valid away from underflow; callers pick such inputs.
long double BruteForceGmmLogDensity(const DiagGmm &model,
                                    std::span<const double> x);

// Log-density of a single diagonal Gaussian, written out term by term.
long double DiagGaussianLogDensity(std::span<const double> mean,
                                   std::span<const double> var,
                                   std::span<const double> x);

// Numerically frozen orthonormal 4-point DCT-II matrix (row k, column j).
extern const std::array<std::array<double, 4>, 4> kDct4;

// Random symmetric positive definite matrix from A^T A + eps I.
std::vector<double> RandomSpdMatrix(int d, uint64_t seed);

}  // namespace oracle
}  // namespace waveclass

#endif  // WAVECLASS_TESTS_ORACLES_H_
