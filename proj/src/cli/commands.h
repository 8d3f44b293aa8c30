// cli/commands.h

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

#ifndef WAVECLASS_CLI_COMMANDS_H_
#define WAVECLASS_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace waveclass {

// Entry point shared by the binary and the integration tests.  Subcommands:
// synth, ingest, features, train, adapt, classify, sweep, fit-alpha, report.
// Returns the process exit status.
int RunCommand(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err);

}  // namespace waveclass

#endif  // WAVECLASS_CLI_COMMANDS_H_
