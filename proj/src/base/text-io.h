// base/text-io.h

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

#ifndef WAVECLASS_BASE_TEXT_IO_H_
#define WAVECLASS_BASE_TEXT_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace waveclass {

std::vector<std::string> ReadFileLines(const std::string &path);

void WriteFile(const std::string &path, const std::string &content);

// Whitespace-separated tokens.
std::vector<std::string> SplitTokens(std::string_view line);

// Strict numeric parsing; `context` names the file/line for the message.
double ParseDouble(std::string_view token, const std::string &context);
int64_t ParseInt(std::string_view token, const std::string &context);

// 17 significant digits: reading the printed form back yields the identical
// double, which the model-bank round-trip contract depends on.
std::string FormatDouble(double v);

uint64_t Fnv1a(std::string_view s);
std::string ToHex(uint64_t v);

}  // namespace waveclass

#endif  // WAVECLASS_BASE_TEXT_IO_H_
