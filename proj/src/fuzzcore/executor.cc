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

#include "motif/fuzzcore/executor.h"

#include <fcntl.h>
#include <signal.h>
#include <sys/mman.h>
#include <unistd.h>

#include <cstring>
#include <system_error>

#include "motif/error.h"
#include "motif/fuzzcore/coverage.h"
#include "motif/util/subprocess.h"

namespace motif::fuzzcore {

std::string_view CheckpointName(Checkpoint checkpoint) {
  switch (checkpoint) {
    case Checkpoint::kCallOrig: return "CALL_ORIG";
    case Checkpoint::kRetOrig: return "RET_ORIG";
    case Checkpoint::kCallMut: return "CALL_MUT";
    case Checkpoint::kRetMut: return "RET_MUT";
    case Checkpoint::kDiff: return "DIFF";
    case Checkpoint::kEq: return "EQ";
  }
  return "?";
}

std::optional<Checkpoint> ParseCheckpoint(std::string_view token) {
  for (Checkpoint c : {Checkpoint::kCallOrig, Checkpoint::kRetOrig, Checkpoint::kCallMut,
                       Checkpoint::kRetMut, Checkpoint::kDiff, Checkpoint::kEq}) {
    if (CheckpointName(c) == token) return c;
  }
  return std::nullopt;
}

std::vector<Checkpoint> ParseCheckpointLog(std::string_view text) {
  std::vector<Checkpoint> trace;
  std::size_t start = 0;
  while (true) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) break;
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto c = ParseCheckpoint(line)) trace.push_back(*c);
    start = nl + 1;
  }
  return trace;
}

bool IsTracePrefix(const std::vector<Checkpoint>& trace) {
  static const Checkpoint kOrder[] = {Checkpoint::kCallOrig, Checkpoint::kRetOrig,
                                      Checkpoint::kCallMut, Checkpoint::kRetMut};
  if (trace.size() > 5) return false;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i < 4) {
      if (trace[i] != kOrder[i]) return false;
    } else if (trace[i] != Checkpoint::kDiff && trace[i] != Checkpoint::kEq) {
      return false;
    }
  }
  return true;
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kSurvived: return "survived";
    case Verdict::kKillDiff: return "kill-diff";
    case Verdict::kKillCrashMut: return "kill-crash-mut";
    case Verdict::kPreconditionViolation: return "precondition-violation";
    case Verdict::kTimeoutHang: return "timeout-hang";
  }
  return "?";
}

Verdict Classify(const ExecOutcome& outcome) {
  if (outcome.termination == Termination::kTimedOut) return Verdict::kTimeoutHang;
  std::optional<Checkpoint> last;
  if (!outcome.trace.empty()) last = outcome.trace.back();
  if (outcome.termination == Termination::kExited) {
    if (outcome.exit_code == 0 && last == Checkpoint::kEq) return Verdict::kSurvived;
  } else if (outcome.signal == SIGABRT && last == Checkpoint::kDiff) {
    return Verdict::kKillDiff;
  }
  if (last == Checkpoint::kCallMut) return Verdict::kKillCrashMut;
  return Verdict::kPreconditionViolation;
}

Executor::Executor(std::filesystem::path executable, std::filesystem::path work_dir,
                   ExecutorOptions options)
    : executable_(std::filesystem::absolute(executable)),
      work_dir_(std::move(work_dir)),
      options_(std::move(options)) {
  std::filesystem::create_directories(work_dir_);
  coverage_path_ = work_dir_ / "coverage.map";
  log_path_ = work_dir_ / "checkpoints.log";
  input_path_ = work_dir_ / "input.bin";
  int fd = ::open(coverage_path_.c_str(), O_RDWR | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0 || ::ftruncate(fd, kMapSize) != 0) {
    if (fd >= 0) ::close(fd);
    throw Error(ErrorCode::kIo, "cannot create coverage file " + coverage_path_.string());
  }
  void* m = ::mmap(nullptr, kMapSize, PROT_READ | PROT_WRITE, MAP_SHARED, fd, 0);
  ::close(fd);
  if (m == MAP_FAILED) {
    throw Error(ErrorCode::kIo, "cannot map coverage file " + coverage_path_.string());
  }
  map_ = static_cast<std::uint8_t*>(m);
  std::vector<std::string> overrides = {
      "MOTIF_COV_FILE=" + std::filesystem::absolute(coverage_path_).string(),
      "MOTIF_RAND_SEED=" + std::to_string(options_.rand_seed),
  };
  if (options_.channel == LogChannel::kFile) {
    overrides.push_back("MOTIF_LOG_FILE=" + std::filesystem::absolute(log_path_).string());
  }
  for (const auto& e : options_.extra_env) overrides.push_back(e);
  environment_ = EnvironmentWith(overrides);
}

Executor::~Executor() {
  if (map_ != nullptr) ::munmap(map_, kMapSize);
}

ExecOutcome Executor::Run(const Bytes& input) {
  std::memset(map_, 0, kMapSize);
  WriteFileBytes(input_path_, input);
  if (options_.channel == LogChannel::kFile) WriteFileText(log_path_, "");

  ProcessOptions p;
  p.argv = {executable_.string(), std::filesystem::absolute(input_path_).string()};
  p.environment = environment_;
  p.timeout = options_.timeout;
  p.capture_output = options_.channel == LogChannel::kStderr;
  ProcessResult r = RunProcess(p);

  ExecOutcome out;
  switch (r.termination) {
    case ProcessResult::Termination::kExited: out.termination = Termination::kExited; break;
    case ProcessResult::Termination::kSignaled: out.termination = Termination::kSignaled; break;
    case ProcessResult::Termination::kTimedOut: out.termination = Termination::kTimedOut; break;
  }
  out.exit_code = r.exit_code;
  out.signal = r.signal;
  out.wall_time = r.wall_time;
  out.trace = ParseCheckpointLog(options_.channel == LogChannel::kFile
                                     ? ReadFileText(log_path_)
                                     : r.output);
  out.coverage.assign(map_, map_ + kMapSize);
  return out;
}

}  // namespace motif::fuzzcore
