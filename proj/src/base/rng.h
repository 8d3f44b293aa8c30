// base/rng.h

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

#ifndef WAVECLASS_BASE_RNG_H_
#define WAVECLASS_BASE_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace waveclass {

// Deterministic random source.  All variate transformations are done by hand
// on top of mt19937_64 so that a given seed produces the same stream on every
// platform; std::normal_distribution and friends are implementation-defined
// and must not be used anywhere in the pipeline.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Raw() { return engine_(); }

  // Uniform on [0, 1).
  double Uniform() {
    return static_cast<double>(Raw() >> 11) * 0x1.0p-53;
  }

  // Uniform integer on [0, n), n > 0.
  int64_t UniformInt(int64_t n) {
    return static_cast<int64_t>(Raw() % static_cast<uint64_t>(n));
  }

  // Standard normal via Box-Muller.
  double Gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - Uniform();  // (0, 1]
    double u2 = Uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// FNV-1a over the master seed bytes followed by the tag, so that per-task
// streams (per sentence, per model) are independent of evaluation order.
uint64_t DeriveSeed(uint64_t master, std::string_view tag);

}  // namespace waveclass

#endif  // WAVECLASS_BASE_RNG_H_
