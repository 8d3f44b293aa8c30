// corpus/class-map.cc

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

#include "corpus/class-map.h"

#include <algorithm>
#include <set>

#include "base/error.h"
#include "base/text-io.h"

namespace waveclass {

namespace {

std::vector<std::pair<std::string, std::string>> ReadPairFile(
    const std::string &path) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> lines = ReadFileLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    // Whole-line comments only: TIMIT labels such as "h#" contain '#'.
    size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] == '#') continue;
    std::vector<std::string> tokens = SplitTokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("expected 'from to' (" + path + ":" +
                       std::to_string(i + 1) + ")");
    pairs.emplace_back(tokens[0], tokens[1]);
  }
  return pairs;
}

}  // namespace

ClassMap ClassMap::LoadFromFiles(const std::string &fold48_path,
                                 const std::string &fold39_path) {
  return FromPairs(ReadPairFile(fold48_path), ReadPairFile(fold39_path));
}

ClassMap ClassMap::FromPairs(
    const std::vector<std::pair<std::string, std::string>> &fold48,
    const std::vector<std::pair<std::string, std::string>> &fold39) {
  ClassMap map;
  for (const auto &[from, to] : fold48) {
    if (map.fold48_.count(from))
      throw ValidationError("duplicate raw label in fold48: " + from);
    map.fold48_[from] = to;
  }
  for (const auto &[from, to] : fold39) {
    if (map.fold39_.count(from))
      throw ValidationError("duplicate group in fold39: " + from);
    if (to == kRemoved)
      throw ValidationError("fold39 may not remove groups: " + from);
    map.fold39_[from] = to;
  }
  map.Finalize();
  return map;
}

ClassMap ClassMap::Identity(const std::vector<std::string> &groups) {
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(groups.size());
  for (const auto &g : groups) pairs.emplace_back(g, g);
  return FromPairs(pairs, pairs);
}

void ClassMap::Finalize() {
  std::set<std::string> g48;
  for (const auto &[from, to] : fold48_) {
    if (to != kRemoved) g48.insert(to);
  }
  // fold39 must be total on the 48-level groups.
  std::set<std::string> g39;
  for (const auto &g : g48) {
    auto it = fold39_.find(g);
    if (it == fold39_.end())
      throw ValidationError("fold39 missing entry for group: " + g);
    g39.insert(it->second);
  }
  groups48_.assign(g48.begin(), g48.end());
  groups39_.assign(g39.begin(), g39.end());
}

std::string ClassMap::MapLabel(const std::string &raw, FoldLevel level) const {
  auto it = fold48_.find(raw);
  if (it == fold48_.end())
    throw ValidationError("unknown phone label: " + raw);
  if (it->second == kRemoved || level == FoldLevel::k48) return it->second;
  return Fold39(it->second);
}

bool ClassMap::IsRemoved(const std::string &raw) const {
  return MapLabel(raw, FoldLevel::k48) == kRemoved;
}

std::string ClassMap::Fold39(const std::string &group48) const {
  auto it = fold39_.find(group48);
  if (it == fold39_.end())
    throw ValidationError("unknown 48-level group: " + group48);
  return it->second;
}

}  // namespace waveclass
