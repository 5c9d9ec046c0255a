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

#ifndef MOTIF_FUZZCORE_FUZZER_H_
#define MOTIF_FUZZCORE_FUZZER_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "motif/fuzzcore/coverage.h"
#include "motif/fuzzcore/executor.h"
#include "motif/fuzzcore/mutator.h"
#include "motif/util/files.h"

namespace motif::fuzzcore {

enum class Origin { kSeed, kFuzzed };

std::string_view OriginName(Origin origin);

struct QueueEntry {
  std::size_t id = 0;
  Bytes input;
  double discovered_s = 0;
  std::uint64_t exec_index = 0;
  Origin origin = Origin::kSeed;
  std::optional<std::size_t> parent;
  std::optional<Stage> stage;
  BucketSignature signature;
  std::size_t new_pairs = 0;  // pairs first marked by this entry
  bool favored = false;
  bool deterministic_done = false;
};

struct KillRecord {
  std::size_t index = 0;  // n in kill_<n>.bin
  Bytes input;
  Verdict verdict = Verdict::kKillDiff;
  double time_s = 0;
  std::uint64_t exec_index = 0;  // 1-based position in the execution sequence
  Origin origin = Origin::kSeed;
  bool genuine = true;
};

struct FuzzBudget {
  std::chrono::duration<double> time{60.0};
  std::optional<std::uint64_t> max_execs;
};

struct FuzzOptions {
  FuzzBudget budget;
  std::uint64_t rng_seed = 0;
  bool stop_at_first_kill = true;
  // Bytes read by the driver; havoc keeps inputs within [1, 2 * this].
  std::size_t consumed_bytes = 0;
  int base_energy = 32;
  std::size_t deterministic_max_size = 64;
  // Returns true when a killing input is genuine. Without it every kill is.
  std::function<bool(const Bytes&)> kill_filter;
  std::size_t max_false_positives = 8;
  std::size_t max_recorded_kills = 256;
  std::optional<std::filesystem::path> kill_dir;
};

struct FuzzOutcome {
  bool killed = false;  // a genuine kill was found
  std::vector<KillRecord> kills;
  std::uint64_t executions = 0;
  std::vector<QueueEntry> queue;
  std::map<Origin, std::size_t> kills_by_origin;  // genuine kills only
  std::map<Verdict, std::uint64_t> verdict_counts;
  std::size_t false_positives = 0;
  bool false_positive_limit = false;
  double elapsed_s = 0;

  const KillRecord* FirstGenuineKill() const;
};

// Runs the seeds, then the select, mutate and execute loop against one
// driver. Throws NoSeeds when `seeds` is empty.
FuzzOutcome FuzzMutant(Executor& executor, const std::vector<Bytes>& seeds,
                       const FuzzOptions& options);

}  // namespace motif::fuzzcore

#endif  // MOTIF_FUZZCORE_FUZZER_H_
