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

#include "motif/campaign/report.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "motif/campaign/fisher.h"

namespace motif::campaign {
namespace {

using nlohmann::json;

bool IsFuzzed(MutantVerdict v) {
  return v == MutantVerdict::kKilledGenuine || v == MutantVerdict::kLive ||
         v == MutantVerdict::kLiveFpOnly;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Seconds(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", t);
  return buf;
}

std::string Probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", p);
  return buf;
}

std::vector<double> KillTimes(const std::vector<CampaignRecord>& records) {
  std::vector<double> times;
  for (const auto& r : records) {
    if (r.verdict == MutantVerdict::kKilledGenuine) times.push_back(r.first_kill_s.value_or(0));
  }
  std::sort(times.begin(), times.end());
  return times;
}

}  // namespace

std::uint64_t RunSummary::Count(MutantVerdict v) const {
  auto it = counts.find(v);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t RunSummary::Fuzzed() const {
  return Count(MutantVerdict::kKilledGenuine) + Count(MutantVerdict::kLive) +
         Count(MutantVerdict::kLiveFpOnly);
}

Report BuildReport(const std::vector<CampaignRecord>& records) {
  std::map<std::string, std::vector<const CampaignRecord*>> by_run;
  for (const auto& r : records) by_run[r.run_id].push_back(&r);

  Report report;
  std::uint64_t killed = 0;
  std::uint64_t fuzzed = 0;
  for (const auto& [run_id, rs] : by_run) {
    RunSummary s;
    s.run_id = run_id;
    std::vector<double> times;
    for (const CampaignRecord* r : rs) {
      ++s.total;
      ++s.counts[r->verdict];
      if (r->verdict == MutantVerdict::kKilledGenuine) {
        if (r->kill_origin == fuzzcore::Origin::kSeed) {
          ++s.seed_kills;
        } else {
          ++s.fuzzed_kills;
        }
        times.push_back(r->first_kill_s.value_or(0));
      }
    }
    killed += s.Count(MutantVerdict::kKilledGenuine);
    fuzzed += s.Fuzzed();
    std::sort(times.begin(), times.end());
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (i + 1 < times.size() && times[i + 1] == times[i]) continue;
      report.curve.push_back({run_id, times[i], 100.0 * static_cast<double>(i + 1) /
                                                    static_cast<double>(s.Fuzzed())});
    }
    report.runs.push_back(std::move(s));
  }
  if (fuzzed > 0) report.score = static_cast<double>(killed) / static_cast<double>(fuzzed);
  return report;
}

std::string FormatScore(const std::optional<double>& score) {
  if (!score) return "n/a";
  return Fixed(*score * 100.0, 2) + "%";
}

std::string KillCurveCsv(const Report& report) {
  std::string out = "run_id,t_seconds,pct_killed\n";
  for (const auto& p : report.curve) {
    out += p.run_id + "," + Seconds(p.t_seconds) + "," + Fixed(p.pct_killed, 4) + "\n";
  }
  return out;
}

std::string FormatReport(const Report& report) {
  std::ostringstream out;
  out << "mutation score: " << FormatScore(report.score) << "\n";
  for (const auto& s : report.runs) {
    out << "run " << s.run_id << ": " << s.total << " mutants";
    for (MutantVerdict v : {MutantVerdict::kKilledGenuine, MutantVerdict::kLive,
                            MutantVerdict::kLiveFpOnly, MutantVerdict::kTceDropped,
                            MutantVerdict::kStillborn}) {
      out << ", " << MutantVerdictName(v) << " " << s.Count(v);
    }
    out << "\n  kills by origin: seed " << s.seed_kills << ", fuzzed " << s.fuzzed_kills << "\n";
  }
  return out.str();
}

std::string ReportJson(const Report& report) {
  json runs = json::array();
  for (const auto& s : report.runs) {
    json counts = json::object();
    for (MutantVerdict v : {MutantVerdict::kKilledGenuine, MutantVerdict::kLive,
                            MutantVerdict::kLiveFpOnly, MutantVerdict::kTceDropped,
                            MutantVerdict::kStillborn}) {
      counts[std::string(MutantVerdictName(v))] = s.Count(v);
    }
    runs.push_back({{"run_id", s.run_id},
                    {"total", s.total},
                    {"counts", counts},
                    {"kills_by_origin", {{"seed", s.seed_kills}, {"fuzzed", s.fuzzed_kills}}}});
  }
  json curve = json::array();
  for (const auto& p : report.curve) {
    curve.push_back({{"run_id", p.run_id}, {"t_seconds", p.t_seconds}, {"pct_killed", p.pct_killed}});
  }
  json j = {{"mutation_score", report.score ? json(*report.score) : json(nullptr)},
            {"mutation_score_text", FormatScore(report.score)},
            {"runs", runs},
            {"kill_curve", curve}};
  return j.dump(2);
}

std::vector<FisherRow> CompareStores(const std::vector<CampaignRecord>& a,
                                     const std::vector<CampaignRecord>& b) {
  std::vector<double> ta = KillTimes(a);
  std::vector<double> tb = KillTimes(b);
  auto fuzzed = [](const std::vector<CampaignRecord>& rs) {
    return static_cast<std::uint64_t>(
        std::count_if(rs.begin(), rs.end(), [](const auto& r) { return IsFuzzed(r.verdict); }));
  };
  const std::uint64_t na = fuzzed(a);
  const std::uint64_t nb = fuzzed(b);
  std::set<double> times(ta.begin(), ta.end());
  times.insert(tb.begin(), tb.end());
  std::vector<FisherRow> rows;
  for (double t : times) {
    FisherRow row;
    row.t_seconds = t;
    row.killed_a = std::upper_bound(ta.begin(), ta.end(), t) - ta.begin();
    row.killed_b = std::upper_bound(tb.begin(), tb.end(), t) - tb.begin();
    row.live_a = na - row.killed_a;
    row.live_b = nb - row.killed_b;
    row.p = FisherExact(row.killed_a, row.live_a, row.killed_b, row.live_b);
    rows.push_back(row);
  }
  return rows;
}

std::string FormatComparison(const std::vector<FisherRow>& rows) {
  std::ostringstream out;
  out << "t_seconds  killed_a  live_a  killed_b  live_b  p\n";
  for (const auto& r : rows) {
    out << Seconds(r.t_seconds) << "  " << r.killed_a << "  " << r.live_a << "  " << r.killed_b
        << "  " << r.live_b << "  " << Probability(r.p) << "\n";
  }
  return out.str();
}

std::string ComparisonJson(const std::vector<FisherRow>& rows) {
  json j = json::array();
  for (const auto& r : rows) {
    j.push_back({{"t_seconds", r.t_seconds},
                 {"killed_a", r.killed_a},
                 {"live_a", r.live_a},
                 {"killed_b", r.killed_b},
                 {"live_b", r.live_b},
                 {"p", r.p}});
  }
  return j.dump(2);
}

}  // namespace motif::campaign
