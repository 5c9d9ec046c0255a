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

#ifndef MOTIF_CAMPAIGN_RECORD_H_
#define MOTIF_CAMPAIGN_RECORD_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motif/fuzzcore/fuzzer.h"

namespace motif::campaign {

enum class MutantVerdict { kKilledGenuine, kLive, kLiveFpOnly, kTceDropped, kStillborn };

std::string_view MutantVerdictName(MutantVerdict verdict);  // "killed-genuine", ...
std::optional<MutantVerdict> ParseMutantVerdict(std::string_view name);

// One line of results.ndjson.
struct CampaignRecord {
  std::string run_id;
  int mutant_id = 0;
  std::string function;
  std::string source;
  std::string op;
  int line = 0;
  std::string original;
  std::string replacement;
  MutantVerdict verdict = MutantVerdict::kLive;
  // tce-equivalent, tce-duplicate, denylisted, or a build diagnostic.
  std::string reason;
  std::optional<int> duplicate_of;
  std::optional<double> first_kill_s;
  std::optional<std::uint64_t> first_kill_exec;
  std::optional<fuzzcore::Origin> kill_origin;
  std::optional<std::string> kill_verdict;
  std::uint64_t executions = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t queue_size = 0;
  std::vector<std::string> killing_inputs;  // relative to the output directory
  double elapsed_s = 0;
};

// Single-line JSON without a trailing newline.
std::string RecordLine(const CampaignRecord& record);
CampaignRecord ParseRecordLine(std::string_view line);

// Appends one newline-terminated record with a single write(2) on an
// O_APPEND descriptor.
void AppendRecord(const std::filesystem::path& path, const CampaignRecord& record);

// Reads a results log, or `results.ndjson` inside a directory. Blank lines
// and a torn final line are skipped.
std::vector<CampaignRecord> LoadStore(const std::filesystem::path& path);

inline constexpr std::string_view kResultsFile = "results.ndjson";
inline constexpr std::string_view kSummaryFile = "summary.json";

}  // namespace motif::campaign

#endif  // MOTIF_CAMPAIGN_RECORD_H_
