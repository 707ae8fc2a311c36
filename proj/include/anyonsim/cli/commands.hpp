// Copyright 2026 The anyonsim Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anyonsim/cli/config.hpp"

namespace anyonsim::cli {

enum ExitCode : int { kExitOk = 0, kExitInvariantFailed = 1, kExitUsage = 2, kExitContract = 3 };

/// Command-line overrides applied on top of the config file.
struct CommonOptions {
  std::string config;
  /// A scenario name or "all".
  std::optional<std::string> scenario;
  std::optional<std::string> noise;
  std::optional<std::uint64_t> seed;
  std::string out = "out";
};

/// Loads the config and applies overrides. Throws ConfigError.
RunConfig resolve_config(const CommonOptions& options);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The invariant suite behind `verify`.
std::vector<CheckResult> verify_checks(const RunConfig& cfg);

int cmd_run(const CommonOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const CommonOptions& options, std::ostream& out, std::ostream& err);
int cmd_sweep(const CommonOptions& options, const std::string& parameter, const std::vector<double>& values,
              std::ostream& out, std::ostream& err);

/// Parses argv (subcommands run | verify | sweep) and returns the exit code.
int run_cli(int argc, char** argv);

}  // namespace anyonsim::cli
