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

#include "motif/util/subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/syscall.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "motif/error.h"

extern char** environ;

namespace motif {
namespace {

int PidfdOpen(pid_t pid) {
  return static_cast<int>(::syscall(SYS_pidfd_open, pid, 0));
}

std::vector<char*> CStrings(std::vector<std::string>& strings) {
  std::vector<char*> out;
  out.reserve(strings.size() + 1);
  for (auto& s : strings) out.push_back(s.data());
  out.push_back(nullptr);
  return out;
}

}  // namespace

std::optional<std::string> FindInPath(std::string_view program) {
  if (program.find('/') != std::string_view::npos) {
    if (::access(std::string(program).c_str(), X_OK) == 0) return std::string(program);
    return std::nullopt;
  }
  const char* path = std::getenv("PATH");
  std::string dirs = path ? path : "/usr/local/bin:/usr/bin:/bin";
  std::size_t start = 0;
  while (start <= dirs.size()) {
    std::size_t end = dirs.find(':', start);
    if (end == std::string::npos) end = dirs.size();
    std::string dir = dirs.substr(start, end - start);
    if (dir.empty()) dir = ".";
    std::string candidate = dir + "/" + std::string(program);
    if (::access(candidate.c_str(), X_OK) == 0) return candidate;
    start = end + 1;
  }
  return std::nullopt;
}

std::vector<std::string> EnvironmentWith(
    const std::vector<std::string>& overrides) {
  std::vector<std::string> env;
  for (char** e = environ; e && *e; ++e) {
    std::string_view entry(*e);
    std::string_view key = entry.substr(0, entry.find('='));
    bool replaced = false;
    for (const auto& o : overrides) {
      if (std::string_view(o).substr(0, o.find('=')) == key) replaced = true;
    }
    if (!replaced) env.emplace_back(entry);
  }
  for (const auto& o : overrides) env.push_back(o);
  return env;
}

std::vector<std::string> SplitCommandLine(std::string_view command) {
  std::vector<std::string> words;
  std::string current;
  bool in_word = false;
  char quote = 0;
  for (char c : command) {
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else {
        current += c;
      }
      continue;
    }
    if (c == '\'' || c == '"') {
      quote = c;
      in_word = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n') {
      if (in_word) words.push_back(std::move(current));
      current.clear();
      in_word = false;
      continue;
    }
    current += c;
    in_word = true;
  }
  if (in_word) words.push_back(std::move(current));
  return words;
}

ProcessResult RunProcess(const ProcessOptions& options) {
  if (options.argv.empty()) {
    throw Error(ErrorCode::kSpawnFailure, "empty command");
  }
  std::optional<std::string> program = FindInPath(options.argv[0]);
  if (!program) {
    throw Error(ErrorCode::kSpawnFailure, "program not found: " + options.argv[0]);
  }

  // Everything the child touches is prepared before fork(): after fork the
  // child may only make async-signal-safe calls.
  std::vector<std::string> argv_storage = options.argv;
  std::vector<std::string> env_storage =
      options.environment.empty() ? EnvironmentWith({}) : options.environment;
  std::vector<char*> argv = CStrings(argv_storage);
  std::vector<char*> envp = CStrings(env_storage);

  int out_pipe[2] = {-1, -1};
  if (options.capture_output && ::pipe2(out_pipe, O_CLOEXEC) != 0) {
    throw Error(ErrorCode::kSpawnFailure, std::string("pipe: ") + std::strerror(errno));
  }
  // Reports an exec failure back to the parent.
  int err_pipe[2];
  if (::pipe2(err_pipe, O_CLOEXEC) != 0) {
    throw Error(ErrorCode::kSpawnFailure, std::string("pipe: ") + std::strerror(errno));
  }

  auto start = std::chrono::steady_clock::now();
  pid_t pid = ::fork();
  if (pid < 0) {
    throw Error(ErrorCode::kSpawnFailure, std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    int null_fd = ::open("/dev/null", O_RDWR);
    ::dup2(null_fd, STDIN_FILENO);
    int sink = options.capture_output ? out_pipe[1] : null_fd;
    ::dup2(sink, STDOUT_FILENO);
    ::dup2(sink, STDERR_FILENO);
    if (!options.working_directory.empty() &&
        ::chdir(options.working_directory.c_str()) != 0) {
      int e = errno;
      (void)!::write(err_pipe[1], &e, sizeof(e));
      ::_exit(127);
    }
    ::execve(program->c_str(), argv.data(), envp.data());
    int e = errno;
    (void)!::write(err_pipe[1], &e, sizeof(e));
    ::_exit(127);
  }

  ::close(err_pipe[1]);
  if (options.capture_output) ::close(out_pipe[1]);

  int child_errno = 0;
  ssize_t got = ::read(err_pipe[0], &child_errno, sizeof(child_errno));
  ::close(err_pipe[0]);

  ProcessResult result;
  int pidfd = PidfdOpen(pid);
  auto deadline = options.timeout ? start + *options.timeout
                                  : std::chrono::steady_clock::time_point::max();
  bool output_open = options.capture_output;
  bool exited = false;
  bool timed_out = false;
  char buf[4096];
  while (!exited) {
    std::vector<pollfd> fds;
    if (pidfd >= 0) fds.push_back({pidfd, POLLIN, 0});
    if (output_open) fds.push_back({out_pipe[0], POLLIN, 0});
    int wait_ms = -1;
    if (options.timeout) {
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      wait_ms = static_cast<int>(std::max<long long>(0, left.count()));
    }
    if (pidfd < 0 && !output_open) break;  // fall back to a blocking wait
    int ready = ::poll(fds.data(), fds.size(), wait_ms);
    if (ready < 0 && errno == EINTR) continue;
    if (ready == 0) {
      ::kill(pid, SIGKILL);
      timed_out = true;
      break;
    }
    for (const pollfd& p : fds) {
      if (!p.revents) continue;
      if (p.fd == pidfd) {
        exited = true;
      } else {
        ssize_t n = ::read(out_pipe[0], buf, sizeof(buf));
        if (n > 0) {
          result.output.append(buf, static_cast<std::size_t>(n));
        } else {
          output_open = false;
        }
      }
    }
  }
  // Drain whatever the child wrote before exiting.
  while (output_open) {
    ssize_t n = ::read(out_pipe[0], buf, sizeof(buf));
    if (n <= 0) break;
    result.output.append(buf, static_cast<std::size_t>(n));
  }
  if (options.capture_output) ::close(out_pipe[0]);
  if (pidfd >= 0) ::close(pidfd);

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  result.wall_time = std::chrono::steady_clock::now() - start;

  if (got == static_cast<ssize_t>(sizeof(child_errno))) {
    throw Error(ErrorCode::kSpawnFailure,
                "exec " + *program + ": " + std::strerror(child_errno));
  }
  if (timed_out) {
    result.termination = ProcessResult::Termination::kTimedOut;
  } else if (WIFSIGNALED(status)) {
    result.termination = ProcessResult::Termination::kSignaled;
    result.signal = WTERMSIG(status);
  } else {
    result.termination = ProcessResult::Termination::kExited;
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

}  // namespace motif
