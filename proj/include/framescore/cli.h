// Copyright 2026 The Framescore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMESCORE_CLI_H_
#define FRAMESCORE_CLI_H_

#include <ostream>

namespace framescore {

// Exit codes of the framescore command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // unreadable, invalid or unscoreable input
inline constexpr int kExitUsage = 2;

// Entry point of `framescore score|bleu|correlate|validate|serve`. Reports
// go to out, diagnostics and usage text to err.
int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace framescore

#endif  // FRAMESCORE_CLI_H_
