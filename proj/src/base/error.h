// base/error.h

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

#ifndef WAVECLASS_BASE_ERROR_H_
#define WAVECLASS_BASE_ERROR_H_

#include <stdexcept>
#include <string>

namespace waveclass {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input text (bad token, bad line); message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Inconsistent or incomplete configuration (missing model, basis mismatch).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Dimension or shape disagreement between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Underflow / non-finite result that offsetting could not avoid.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Model estimation failed (persistent component collapse, too little data).
class TrainingError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace waveclass

#endif  // WAVECLASS_BASE_ERROR_H_
