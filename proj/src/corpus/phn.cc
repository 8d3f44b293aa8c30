// corpus/phn.cc

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

#include "corpus/phn.h"

#include "base/error.h"
#include "base/text-io.h"

namespace waveclass {

std::vector<PhonemeInterval> ParsePhnLines(const std::vector<std::string> &lines,
                                           const std::string &origin) {
  std::vector<PhonemeInterval> intervals;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string &line = lines[i];
    std::vector<std::string> tokens = SplitTokens(line);
    if (tokens.empty()) continue;
    std::string context = origin + ":" + std::to_string(i + 1);
    if (tokens.size() != 3)
      throw ParseError("expected 'start end label' (" + context + ")");
    PhonemeInterval iv;
    iv.start = ParseInt(tokens[0], context);
    iv.end = ParseInt(tokens[1], context);
    iv.label = tokens[2];
    if (iv.start < 0 || iv.start >= iv.end)
      throw ValidationError("interval must satisfy 0 <= start < end (" +
                            context + ")");
    if (iv.label.empty())
      throw ValidationError("empty label (" + context + ")");
    if (!intervals.empty() && iv.start < intervals.back().end)
      throw ValidationError("overlapping or out-of-order interval (" + context +
                            ")");
    intervals.push_back(std::move(iv));
  }
  return intervals;
}

std::vector<PhonemeInterval> LoadPhnLabels(const std::string &path) {
  return ParsePhnLines(ReadFileLines(path), path);
}

}  // namespace waveclass
