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

#include "motif/fuzzcore/fuzzer.h"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "motif/error.h"

namespace motif::fuzzcore {

std::string_view OriginName(Origin origin) {
  return origin == Origin::kSeed ? "seed" : "fuzzed";
}

const KillRecord* FuzzOutcome::FirstGenuineKill() const {
  for (const auto& k : kills) {
    if (k.genuine) return &k;
  }
  return nullptr;
}

namespace {

class Campaign {
 public:
  Campaign(Executor& executor, const FuzzOptions& options)
      : executor_(executor), options_(options), rng_(options.rng_seed) {
    limits_.max_size = std::max<std::size_t>(1, 2 * options.consumed_bytes);
    start_ = std::chrono::steady_clock::now();
  }

  FuzzOutcome Run(const std::vector<Bytes>& seeds) {
    for (const Bytes& seed : seeds) {
      if (Done()) break;
      Execute(seed, Origin::kSeed, std::nullopt, std::nullopt, /*always_admit=*/true);
    }
    std::size_t cursor = 0;
    while (!Done() && !out_.queue.empty()) {
      if (cursor % out_.queue.size() == 0) UpdateFavored();
      std::size_t id = cursor % out_.queue.size();
      ++cursor;
      FuzzEntry(id);
    }
    out_.elapsed_s = Elapsed();
    return std::move(out_);
  }

 private:
  double Elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool Done() const {
    if (stop_) return true;
    if (options_.budget.max_execs && out_.executions >= *options_.budget.max_execs) return true;
    return Elapsed() >= options_.budget.time.count();
  }

  void FuzzEntry(std::size_t id) {
    if (!out_.queue[id].deterministic_done &&
        out_.queue[id].input.size() <= options_.deterministic_max_size) {
      out_.queue[id].deterministic_done = true;
      Bytes base = out_.queue[id].input;
      DeterministicStages(base, [&](Stage stage, const Bytes& candidate) {
        if (Done()) return false;
        Execute(candidate, Origin::kFuzzed, id, stage, false);
        return true;
      });
    }
    int energy = options_.base_energy * (out_.queue[id].favored ? 2 : 1);
    for (int i = 0; i < energy && !Done(); ++i) {
      Bytes base = out_.queue[id].input;
      Stage stage = Stage::kHavoc;
      const Bytes* partner = nullptr;
      if (out_.queue.size() > 1 && rng_() % 4 == 0) {
        std::size_t other = rng_() % (out_.queue.size() - 1);
        if (other >= id) ++other;
        partner = &out_.queue[other].input;
        stage = Stage::kSplice;
      }
      Bytes candidate = MutateInput(base, rng_, stage, limits_, partner);
      Execute(candidate, Origin::kFuzzed, id, stage, false);
    }
  }

  void Execute(const Bytes& input, Origin origin, std::optional<std::size_t> parent,
               std::optional<Stage> stage, bool always_admit) {
    ExecOutcome outcome = executor_.Run(input);
    ++out_.executions;
    Verdict verdict = Classify(outcome);
    ++out_.verdict_counts[verdict];
    if (IsKill(verdict)) RecordKill(input, verdict, origin);
    bool admissible = always_admit || verdict == Verdict::kSurvived || IsKill(verdict);
    if (!admissible) return;
    BucketSignature sig = Signature(outcome.coverage);
    if (!always_admit && !virgin_.IsInteresting(sig)) return;
    QueueEntry e;
    e.id = out_.queue.size();
    e.input = input;
    e.discovered_s = Elapsed();
    e.exec_index = out_.executions;
    e.origin = origin;
    e.parent = parent;
    e.stage = stage;
    e.new_pairs = virgin_.Mark(sig);
    e.signature = std::move(sig);
    out_.queue.push_back(std::move(e));
  }

  void RecordKill(const Bytes& input, Verdict verdict, Origin origin) {
    bool genuine = options_.kill_filter ? options_.kill_filter(input) : true;
    KillRecord k;
    k.index = ++kill_count_;
    k.input = input;
    k.verdict = verdict;
    k.time_s = Elapsed();
    k.exec_index = out_.executions;
    k.origin = origin;
    k.genuine = genuine;
    if (genuine) {
      out_.killed = true;
      ++out_.kills_by_origin[origin];
    } else {
      ++out_.false_positives;
    }
    if (options_.kill_dir) Persist(k);
    if (out_.kills.size() < options_.max_recorded_kills) out_.kills.push_back(std::move(k));
    if (genuine && options_.stop_at_first_kill) stop_ = true;
    if (!genuine && out_.false_positives >= options_.max_false_positives) {
      out_.false_positive_limit = true;
      stop_ = true;
    }
  }

  void Persist(const KillRecord& k) {
    const auto& dir = *options_.kill_dir;
    std::filesystem::create_directories(dir);
    std::string stem = "kill_" + std::to_string(k.index);
    WriteFileBytes(dir / (stem + ".bin"), k.input);
    nlohmann::json meta = {
        {"kill", k.index},
        {"verdict", VerdictName(k.verdict)},
        {"time_s", k.time_s},
        {"exec_index", k.exec_index},
        {"origin", OriginName(k.origin)},
        {"genuine", k.genuine},
        {"size", k.input.size()},
    };
    WriteFileText(dir / (stem + ".json"), meta.dump() + "\n");
  }

  void UpdateFavored() {
    std::map<std::pair<std::uint16_t, Bucket>, std::size_t> top;
    for (const auto& e : out_.queue) {
      for (const auto& pair : e.signature) {
        auto it = top.find(pair);
        if (it == top.end() || e.input.size() < out_.queue[it->second].input.size()) {
          top[pair] = e.id;
        }
      }
    }
    for (auto& e : out_.queue) e.favored = false;
    for (const auto& [pair, id] : top) out_.queue[id].favored = true;
  }

  Executor& executor_;
  const FuzzOptions& options_;
  Rng rng_;
  MutationLimits limits_;
  VirginMap virgin_;
  FuzzOutcome out_;
  std::chrono::steady_clock::time_point start_;
  std::size_t kill_count_ = 0;
  bool stop_ = false;
};

}  // namespace

FuzzOutcome FuzzMutant(Executor& executor, const std::vector<Bytes>& seeds,
                       const FuzzOptions& options) {
  if (seeds.empty()) throw Error(ErrorCode::kNoSeeds, "at least one seed is required");
  Campaign campaign(executor, options);
  return campaign.Run(seeds);
}

}  // namespace motif::fuzzcore
