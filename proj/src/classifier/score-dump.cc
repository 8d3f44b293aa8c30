// classifier/score-dump.cc

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

#include "classifier/score-dump.h"

#include <sstream>

#include "base/error.h"
#include "base/text-io.h"

namespace waveclass {

void SaveScoreDump(const ScoreDump &dump, const std::string &path) {
  std::ostringstream out;
  out << "waveclass-scores 1\n";
  out << "config_hash " << (dump.config_hash.empty() ? "-" : dump.config_hash)
      << " seed " << dump.seed << "\n";
  out << "condition " << dump.condition << " rule " << dump.rule << " basis "
      << dump.basis << "\n";
  out << "classes " << dump.classes.size();
  for (const auto &c : dump.classes) out << " " << c;
  out << "\n";
  out << "instances " << dump.instance_ids.size() << "\n";
  for (size_t i = 0; i < dump.instance_ids.size(); ++i) {
    out << dump.instance_ids[i] << " " << dump.truths[i];
    for (double v : dump.scores[i]) out << " " << FormatDouble(v);
    out << "\n";
  }
  out << "end\n";
  WriteFile(path, out.str());
}

ScoreDump LoadScoreDump(const std::string &path) {
  std::vector<std::string> lines = ReadFileLines(path);
  size_t li = 0;
  auto next = [&]() -> std::vector<std::string> {
    while (li < lines.size()) {
      auto tokens = SplitTokens(lines[li]);
      ++li;
      if (!tokens.empty()) return tokens;
    }
    throw ParseError("unexpected end of score dump: " + path);
  };

  auto header = next();
  if (header.size() != 2 || header[0] != "waveclass-scores" || header[1] != "1")
    throw ParseError("not a waveclass score dump: " + path);

  ScoreDump dump;
  auto meta = next();
  if (meta.size() != 4 || meta[0] != "config_hash")
    throw ParseError("bad score dump metadata: " + path);
  dump.config_hash = meta[1] == "-" ? "" : meta[1];
  dump.seed = static_cast<uint64_t>(ParseInt(meta[3], path));

  auto cond = next();
  if (cond.size() != 6 || cond[0] != "condition")
    throw ParseError("bad score dump condition line: " + path);
  dump.condition = cond[1];
  dump.rule = cond[3];
  dump.basis = cond[5];

  auto classes = next();
  if (classes.size() < 2 || classes[0] != "classes")
    throw ParseError("bad score dump class list: " + path);
  int64_t n_classes = ParseInt(classes[1], path);
  if (static_cast<int64_t>(classes.size()) != n_classes + 2)
    throw ParseError("bad class count: " + path);
  dump.classes.assign(classes.begin() + 2, classes.end());

  auto ninst = next();
  if (ninst.size() != 2 || ninst[0] != "instances")
    throw ParseError("bad instance count line: " + path);
  int64_t n = ParseInt(ninst[1], path);
  for (int64_t i = 0; i < n; ++i) {
    auto tokens = next();
    if (static_cast<int64_t>(tokens.size()) != n_classes + 2)
      throw ParseError("bad score line " + std::to_string(i) + ": " + path);
    dump.instance_ids.push_back(tokens[0]);
    dump.truths.push_back(tokens[1]);
    std::vector<double> row(n_classes);
    for (int64_t k = 0; k < n_classes; ++k)
      row[k] = ParseDouble(tokens[2 + k], path);
    dump.scores.push_back(std::move(row));
  }
  auto tail = next();
  if (tail.size() != 1 || tail[0] != "end")
    throw ParseError("missing end record: " + path);
  return dump;
}

}  // namespace waveclass
