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

#ifndef MOTIF_CAMPAIGN_CONFIG_H_
#define MOTIF_CAMPAIGN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "motif/c_model/layout.h"
#include "motif/driver_synth/driver_synth.h"
#include "motif/mutagen/mutagen.h"

namespace motif::campaign {

struct Target {
  std::filesystem::path source;
  std::string function;
  // Merged over the campaign-wide map; per-target entries win.
  std::map<std::string, std::uint64_t> pointer_lengths;
  std::set<std::string> excluded;
  std::optional<std::filesystem::path> setup_snippet;
};

struct CampaignConfig {
  std::string run_id = "run";
  std::vector<Target> targets;
  mutagen::OperatorSet operators = mutagen::AllOperators();
  double budget_seconds = 60;
  std::optional<std::uint64_t> max_execs;
  std::uint64_t exec_timeout_ms = 1000;
  int workers = 1;
  std::uint64_t rng_seed = 0;
  // Placeholders: {runtime}, {out}, {src} (expands to every source file).
  std::string build_template = "cc -std=gnu17 -w -O1 -I {runtime} -o {out} {src}";
  // Directory holding motif_runtime.h and motif_runtime.c. ParseConfig
  // defaults it to DefaultRuntimeDir().
  std::filesystem::path runtime_dir;
  std::filesystem::path output_dir = "motif-out";
  c_model::AbiProfile abi = c_model::AbiProfile::Lp64();
  std::uint64_t array_default_length = 100;
  std::map<std::string, std::uint64_t> pointer_lengths;
  std::set<std::string> timestamp_types;
  std::optional<std::filesystem::path> setup_snippet;
  driver_synth::CheckpointChannel checkpoint_channel = driver_synth::CheckpointChannel::kFile;
  bool tce = true;
  std::string tce_template = "cc -std=gnu17 -w -c {optlevel} -o {out} {src}";
  std::vector<std::string> tce_levels = {"-O2"};
  std::optional<std::filesystem::path> denylist;
  bool cross_replay = false;
  bool stop_at_first_kill = true;
  std::size_t max_false_positives = 8;
};

// Parses the JSON form. Relative paths are resolved against `base_dir`.
// Throws InvalidConfig on unknown keys, bad types or violated bounds.
// The runtime sources shipped with this build.
std::filesystem::path DefaultRuntimeDir();

CampaignConfig ParseConfig(std::string_view json_text, const std::filesystem::path& base_dir);
CampaignConfig LoadConfig(const std::filesystem::path& path);

// Checks budget > 0, workers >= 1 and at least one target.
void ValidateConfig(const CampaignConfig& config);

// Denylist file: one mutant id per line; '#' starts a comment.
std::set<int> LoadDenylist(const std::filesystem::path& path);

}  // namespace motif::campaign

#endif  // MOTIF_CAMPAIGN_CONFIG_H_
