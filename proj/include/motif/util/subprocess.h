// Copyright 2026 The Motif Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOTIF_UTIL_SUBPROCESS_H_
#define MOTIF_UTIL_SUBPROCESS_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motif {

struct ProcessOptions {
  std::vector<std::string> argv;
  // Full environment ("KEY=VALUE"); inherits the caller's when empty.
  std::vector<std::string> environment;
  std::optional<std::chrono::milliseconds> timeout;
  bool capture_output = false;  // stdout and stderr, merged
  std::string working_directory;
};

struct ProcessResult {
  enum class Termination { kExited, kSignaled, kTimedOut };
  Termination termination = Termination::kExited;
  int exit_code = 0;
  int signal = 0;
  std::string output;
  std::chrono::nanoseconds wall_time{0};

  bool Succeeded() const {
    return termination == Termination::kExited && exit_code == 0;
  }
};

// Runs argv[0] (searched in PATH when it has no slash) to completion.
// A process still running at the deadline is killed with SIGKILL and
// reported as kTimedOut. Throws Error(kSpawnFailure) when the program
// cannot be started.
ProcessResult RunProcess(const ProcessOptions& options);

// Splits a command template on whitespace, honoring single and double
// quotes. No other shell syntax is interpreted.
std::vector<std::string> SplitCommandLine(std::string_view command);

// Absolute path of `program` found via PATH, or nullopt.
std::optional<std::string> FindInPath(std::string_view program);

// The caller's environment with `overrides` ("KEY=VALUE") replacing or
// adding entries.
std::vector<std::string> EnvironmentWith(
    const std::vector<std::string>& overrides);

}  // namespace motif

#endif  // MOTIF_UTIL_SUBPROCESS_H_
