// base/math-util.h

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

#ifndef WAVECLASS_BASE_MATH_UTIL_H_
#define WAVECLASS_BASE_MATH_UTIL_H_

#include <span>
#include <vector>

namespace waveclass {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLog2Pi = 1.8378770664093454836;

// log(sum_i exp(x_i)), stable; returns -inf for empty input or all -inf.
double LogSumExp(std::span<const double> x);

double Mean(std::span<const double> x);

// Mean of squares.
double MeanSquare(std::span<const double> x);

// Population (maximum-likelihood) variance about the mean.
double Variance(std::span<const double> x);

double Dot(std::span<const double> a, std::span<const double> b);

}  // namespace waveclass

#endif  // WAVECLASS_BASE_MATH_UTIL_H_
