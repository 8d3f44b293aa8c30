// corpus/phn.h

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

#ifndef WAVECLASS_CORPUS_PHN_H_
#define WAVECLASS_CORPUS_PHN_H_

#include <cstdint>
#include <string>
#include <vector>

namespace waveclass {

// Labeled interval of a sentence, sample-indexed, end exclusive.
struct PhonemeInterval {
  std::string label;
  int64_t start = 0;
  int64_t end = 0;

  int64_t Duration() const { return end - start; }
};

// Parses a TIMIT-style label file ("start end label" per line).  Intervals
// must be in temporal order, non-overlapping, with start < end.  Malformed
// lines raise ParseError with the line number; ordering violations raise
// ValidationError.
std::vector<PhonemeInterval> LoadPhnLabels(const std::string &path);

// Same contract, on in-memory lines (the file loader and tests share it).
std::vector<PhonemeInterval> ParsePhnLines(const std::vector<std::string> &lines,
                                           const std::string &origin);

}  // namespace waveclass

#endif  // WAVECLASS_CORPUS_PHN_H_
