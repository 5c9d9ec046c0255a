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

#ifndef MOTIF_FUZZCORE_EXECUTOR_H_
#define MOTIF_FUZZCORE_EXECUTOR_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motif/util/files.h"

namespace motif::fuzzcore {

enum class Checkpoint { kCallOrig, kRetOrig, kCallMut, kRetMut, kDiff, kEq };

std::string_view CheckpointName(Checkpoint checkpoint);
std::optional<Checkpoint> ParseCheckpoint(std::string_view token);

// One token per complete line. Unknown lines and a trailing partial line
// are ignored.
std::vector<Checkpoint> ParseCheckpointLog(std::string_view text);

// True iff `trace` is a prefix of CALL_ORIG RET_ORIG CALL_MUT RET_MUT (DIFF|EQ).
bool IsTracePrefix(const std::vector<Checkpoint>& trace);

enum class Termination { kExited, kSignaled, kTimedOut };

struct ExecOutcome {
  Termination termination = Termination::kExited;
  int exit_code = 0;
  int signal = 0;
  std::vector<Checkpoint> trace;
  Bytes coverage;  // kMapSize raw counters
  std::chrono::nanoseconds wall_time{0};
};

enum class Verdict {
  kSurvived,
  kKillDiff,
  kKillCrashMut,
  kPreconditionViolation,
  kTimeoutHang,
};

std::string_view VerdictName(Verdict verdict);

Verdict Classify(const ExecOutcome& outcome);

inline bool IsKill(Verdict verdict) {
  return verdict == Verdict::kKillDiff || verdict == Verdict::kKillCrashMut;
}

enum class LogChannel { kFile, kStderr };

struct ExecutorOptions {
  std::chrono::milliseconds timeout{1000};
  std::uint64_t rand_seed = 0;
  LogChannel channel = LogChannel::kFile;
  std::vector<std::string> extra_env;  // "KEY=VALUE"
};

// Runs one driver executable per input. Owns the coverage file, the
// checkpoint log and the input file inside `work_dir`.
class Executor {
 public:
  Executor(std::filesystem::path executable, std::filesystem::path work_dir,
           ExecutorOptions options = {});
  ~Executor();
  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  ExecOutcome Run(const Bytes& input);

  const std::filesystem::path& coverage_path() const { return coverage_path_; }
  const std::filesystem::path& executable() const { return executable_; }

 private:
  std::filesystem::path executable_;
  std::filesystem::path work_dir_;
  ExecutorOptions options_;
  std::filesystem::path coverage_path_;
  std::filesystem::path log_path_;
  std::filesystem::path input_path_;
  std::vector<std::string> environment_;
  std::uint8_t* map_ = nullptr;
};

}  // namespace motif::fuzzcore

#endif  // MOTIF_FUZZCORE_EXECUTOR_H_
