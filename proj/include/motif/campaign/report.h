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

#ifndef MOTIF_CAMPAIGN_REPORT_H_
#define MOTIF_CAMPAIGN_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motif/campaign/record.h"

namespace motif::campaign {

struct RunSummary {
  std::string run_id;
  std::uint64_t total = 0;
  std::map<MutantVerdict, std::uint64_t> counts;
  std::uint64_t seed_kills = 0;
  std::uint64_t fuzzed_kills = 0;

  std::uint64_t Count(MutantVerdict v) const;
  // Mutants that reached fuzzing: killed-genuine + live + live-fp-only.
  std::uint64_t Fuzzed() const;
};

struct CurvePoint {
  std::string run_id;
  double t_seconds = 0;
  double pct_killed = 0;
};

struct Report {
  std::vector<RunSummary> runs;  // ordered by run id
  // Killed-genuine over fuzzed mutants, pooled across runs.
  std::optional<double> score;
  std::vector<CurvePoint> curve;
};

Report BuildReport(const std::vector<CampaignRecord>& records);

// "73.79%" or "n/a".
std::string FormatScore(const std::optional<double>& score);

// Header "run_id,t_seconds,pct_killed" plus one row per curve point.
std::string KillCurveCsv(const Report& report);

std::string FormatReport(const Report& report);
std::string ReportJson(const Report& report);

struct FisherRow {
  double t_seconds = 0;
  std::uint64_t killed_a = 0;
  std::uint64_t live_a = 0;
  std::uint64_t killed_b = 0;
  std::uint64_t live_b = 0;
  double p = 1.0;
};

// At every kill time of either store, compares the cumulative killed and
// not-yet-killed counts of fuzzed mutants with a two-sided Fisher test.
std::vector<FisherRow> CompareStores(const std::vector<CampaignRecord>& a,
                                     const std::vector<CampaignRecord>& b);

std::string FormatComparison(const std::vector<FisherRow>& rows);
std::string ComparisonJson(const std::vector<FisherRow>& rows);

}  // namespace motif::campaign

#endif  // MOTIF_CAMPAIGN_REPORT_H_
