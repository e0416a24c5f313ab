// Copyright 2026 The irac Authors.
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

// The `irac` command line. JSON goes to `out`, diagnostics and timings to
// `err`.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace irac::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kVerifyInvalid = 3,
  kGeneratorUnreachable = 4,
};

/// Environment variables consulted when the matching flag is absent.
inline constexpr const char* kSnapshotEnv = "IRAC_SNAPSHOT";
inline constexpr const char* kGeneratorUrlEnv = "IRAC_GENERATOR_URL";

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irac::cli
