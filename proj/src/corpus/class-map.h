// corpus/class-map.h

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

#ifndef WAVECLASS_CORPUS_CLASS_MAP_H_
#define WAVECLASS_CORPUS_CLASS_MAP_H_

#include <map>
#include <string>
#include <vector>

namespace waveclass {

enum class FoldLevel { k48, k39 };

// Two-stage label folding: raw phone label -> training group -> scoring
// group.  Raw labels may fold to REMOVED (dropped from the corpus); every
// training group must have a scoring group.  Unknown labels fail loudly.
class ClassMap {
 public:
  static constexpr const char *kRemoved = "REMOVED";

  // Each file: one "from to" pair per line, '#' comments.  The second file
  // must be total on the image of the first.
  static ClassMap LoadFromFiles(const std::string &fold48_path,
                                const std::string &fold39_path);

  // Builds from in-memory pairs (synthetic corpora, tests).
  static ClassMap FromPairs(
      const std::vector<std::pair<std::string, std::string>> &fold48,
      const std::vector<std::pair<std::string, std::string>> &fold39);

  // Identity map over the given group names (48-level == 39-level).
  static ClassMap Identity(const std::vector<std::string> &groups);

  // Returns the group label, or kRemoved.  Level k39 composes both stages.
  // Throws ValidationError for labels absent from the table.
  std::string MapLabel(const std::string &raw, FoldLevel level) const;

  bool IsRemoved(const std::string &raw) const;

  // Sorted distinct group names at each level.
  const std::vector<std::string> &Groups48() const { return groups48_; }
  const std::vector<std::string> &Groups39() const { return groups39_; }

  // Folds a 48-level group to its 39-level group.
  std::string Fold39(const std::string &group48) const;

 private:
  void Finalize();

  std::map<std::string, std::string> fold48_;
  std::map<std::string, std::string> fold39_;
  std::vector<std::string> groups48_;
  std::vector<std::string> groups39_;
};

}  // namespace waveclass

#endif  // WAVECLASS_CORPUS_CLASS_MAP_H_
