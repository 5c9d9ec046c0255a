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

#ifndef MOTIF_CAMPAIGN_CAMPAIGN_H_
#define MOTIF_CAMPAIGN_CAMPAIGN_H_

#include <filesystem>
#include <string>
#include <vector>

#include "motif/campaign/config.h"
#include "motif/campaign/record.h"
#include "motif/fuzzcore/executor.h"
#include "motif/mutagen/mutagen.h"
#include "motif/util/files.h"

namespace motif::campaign {

enum class KillCheck { kGenuine, kFalsePositive };

// Replays a killing input on the false-positive driver, which runs the
// original function twice. Anything but a clean EQ run marks the kill as
// a false positive.
KillCheck VerifyKill(const Bytes& input, fuzzcore::Executor& fp_executor);

struct TargetPlan {
  Target target;
  mutagen::SourceFile source;
  std::vector<mutagen::Mutant> mutants;
  std::set<int> denylisted;
  std::string error;  // set when the target could not be parsed
};

struct CampaignPlan {
  std::vector<TargetPlan> targets;
  std::size_t MutantCount() const;
};

// Parses every target and generates its mutants with campaign-wide ids.
// Compiles and runs nothing.
CampaignPlan PlanCampaign(const CampaignConfig& config);
std::string DescribePlan(const CampaignPlan& plan);
std::string PlanJson(const CampaignPlan& plan);

struct CampaignResult {
  std::vector<CampaignRecord> records;  // ordered by mutant id
  std::vector<std::string> errors;
  std::filesystem::path results_path;
  std::filesystem::path summary_path;
};

// Runs TCE, builds drivers and seeds once per function, then fuzzes every
// kept mutant on `config.workers` threads. Records stream into
// results.ndjson as they complete; the file is rewritten in id order at
// the end. Throws CompilerUnavailable when the build compiler is missing
// and InvalidConfig when the runtime sources are not found.
CampaignResult RunCampaign(const CampaignConfig& config);

}  // namespace motif::campaign

#endif  // MOTIF_CAMPAIGN_CAMPAIGN_H_
