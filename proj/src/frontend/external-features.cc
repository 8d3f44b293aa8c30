// frontend/external-features.cc

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

#include "frontend/external-features.h"

#include <sstream>

#include "base/error.h"
#include "base/text-io.h"

namespace waveclass {

FeatureMatrix ReadFeatureFile(const std::string &path, FeatureBasis basis,
                              double rate) {
  std::vector<std::string> lines = ReadFileLines(path);
  FeatureMatrix out;
  out.basis = basis;
  out.rate = rate;
  bool have_header = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string &line = lines[i];
    if (!line.empty() && line[0] == '#') continue;
    auto tokens = SplitTokens(line);
    if (tokens.empty()) continue;
    std::string context = path + ":" + std::to_string(i + 1);
    if (!have_header) {
      if (tokens.size() != 3)
        throw ParseError("expected header 'dim hop width' (" + context + ")");
      out.dim = static_cast<int>(ParseInt(tokens[0], context));
      out.hop_seconds = ParseDouble(tokens[1], context);
      out.width_seconds = ParseDouble(tokens[2], context);
      if (out.dim <= 0 || out.hop_seconds <= 0.0)
        throw ValidationError("bad feature header (" + context + ")");
      have_header = true;
      continue;
    }
    if (static_cast<int>(tokens.size()) != out.dim)
      throw ParseError("frame has " + std::to_string(tokens.size()) +
                       " values, expected " + std::to_string(out.dim) + " (" +
                       context + ")");
    for (const auto &t : tokens) out.data.push_back(ParseDouble(t, context));
    ++out.num_frames;
  }
  if (!have_header) throw ParseError("missing feature header: " + path);
  return out;
}

void WriteFeatureFile(const std::string &path, const FeatureMatrix &features,
                      const std::string &provenance) {
  std::ostringstream out;
  if (!provenance.empty()) out << "# " << provenance << "\n";
  out << features.dim << " " << FormatDouble(features.hop_seconds) << " "
      << FormatDouble(features.width_seconds) << "\n";
  for (int t = 0; t < features.num_frames; ++t) {
    auto frame = features.Frame(t);
    for (int j = 0; j < features.dim; ++j) {
      if (j) out << " ";
      out << FormatDouble(frame[j]);
    }
    out << "\n";
  }
  WriteFile(path, out.str());
}

}  // namespace waveclass
