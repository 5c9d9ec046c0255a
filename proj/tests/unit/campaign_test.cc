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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "motif/campaign/campaign.h"
#include "motif/campaign/config.h"
#include "motif/campaign/fisher.h"
#include "motif/campaign/record.h"
#include "motif/campaign/report.h"
#include "motif/error.h"
#include "motif/util/files.h"
#include "test_support.h"

namespace motif::campaign {
namespace {

using ::motif::testing::CorpusDir;
using ::motif::testing::HaveCCompiler;
using ::motif::testing::RuntimeDir;
using ::motif::testing::ScratchDir;
using nlohmann::json;

// Exact two-sided Fisher p-value from integer hypergeometric weights.
struct ExactFisher {
  static std::uint64_t Choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

  static double P(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    std::uint64_t r1 = a + b, r2 = c + d, c1 = a + c, n = r1 + r2;
    std::uint64_t total = Choose(n, c1);
    std::uint64_t observed = Choose(r1, a) * Choose(r2, c);
    std::uint64_t sum = 0;
    for (std::uint64_t x = 0; x <= std::min(r1, c1); ++x) {
      if (c1 - x > r2) continue;
      std::uint64_t w = Choose(r1, x) * Choose(r2, c1 - x);
      if (w <= observed) sum += w;
    }
    return static_cast<double>(sum) / static_cast<double>(total);
  }
};

TEST(FisherTest, Examples) {
  EXPECT_DOUBLE_EQ(FisherExact(5, 5, 5, 5), 1.0);
  EXPECT_NEAR(FisherExact(10, 0, 0, 10), 2.0 / 184756.0, 1e-15);
  EXPECT_NEAR(FisherExact(0, 10, 10, 0), 2.0 / 184756.0, 1e-15);
  EXPECT_DOUBLE_EQ(FisherExact(0, 0, 0, 0), 1.0);
}

TEST(FisherTest, MatchesExactEnumerationUpTo40) {
  std::size_t tables = 0;
  for (std::uint64_t n = 0; n <= 40; ++n) {
    for (std::uint64_t a = 0; a <= n; ++a) {
      for (std::uint64_t b = 0; a + b <= n; ++b) {
        for (std::uint64_t c = 0; a + b + c <= n; ++c) {
          std::uint64_t d = n - a - b - c;
          double p = FisherExact(a, b, c, d);
          double exact = n == 0 ? 1.0 : ExactFisher::P(a, b, c, d);
          ASSERT_NEAR(p, exact, 1e-9) << a << " " << b << " " << c << " " << d;
          ASSERT_GT(p, 0.0);
          ASSERT_LE(p, 1.0);
          ++tables;
        }
      }
    }
  }
  EXPECT_EQ(tables, 135751u);
}

TEST(FisherTest, SymmetricUnderTranspositionAndRowSwap) {
  for (std::uint64_t a = 0; a <= 9; ++a) {
    for (std::uint64_t b = 0; b <= 9; ++b) {
      for (std::uint64_t c = 0; c <= 9; c += 3) {
        for (std::uint64_t d = 0; d <= 9; d += 2) {
          double p = FisherExact(a, b, c, d);
          EXPECT_NEAR(p, FisherExact(a, c, b, d), 1e-12);
          EXPECT_NEAR(p, FisherExact(c, d, a, b), 1e-12);
        }
      }
    }
  }
}

// Records, reports, comparison.

CampaignRecord Rec(const std::string& run, int id, MutantVerdict v,
                   std::optional<double> t = std::nullopt,
                   fuzzcore::Origin origin = fuzzcore::Origin::kFuzzed) {
  CampaignRecord r;
  r.run_id = run;
  r.mutant_id = id;
  r.function = "f";
  r.verdict = v;
  if (v == MutantVerdict::kKilledGenuine) {
    r.first_kill_s = t.value_or(0);
    r.kill_origin = origin;
  }
  return r;
}

TEST(RecordTest, LineRoundTrip) {
  CampaignRecord r = Rec("r1", 7, MutantVerdict::kKilledGenuine, 1.5, fuzzcore::Origin::kSeed);
  r.op = "ROR";
  r.line = 3;
  r.original = "<";
  r.replacement = ">=";
  r.first_kill_exec = 12;
  r.kill_verdict = "kill-diff";
  r.executions = 40;
  r.killing_inputs = {"f/m7/kills/kill_1.bin"};
  std::string line = RecordLine(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  CampaignRecord back = ParseRecordLine(line);
  EXPECT_EQ(RecordLine(back), line);
  EXPECT_EQ(back.kill_origin, fuzzcore::Origin::kSeed);
  EXPECT_EQ(back.first_kill_exec, 12u);
}

TEST(RecordTest, StoreSkipsTornTail) {
  ScratchDir dir("motif-store");
  AppendRecord(dir / "results.ndjson", Rec("r", 1, MutantVerdict::kLive));
  AppendRecord(dir / "results.ndjson", Rec("r", 2, MutantVerdict::kStillborn));
  std::string text = ReadFileText(dir / "results.ndjson") + "{\"run_id\": \"r\", \"mut";
  WriteFileText(dir / "results.ndjson", text);
  auto records = LoadStore(dir.path());
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1].verdict, MutantVerdict::kStillborn);
}

TEST(RecordTest, VerdictNames) {
  for (MutantVerdict v : {MutantVerdict::kKilledGenuine, MutantVerdict::kLive,
                          MutantVerdict::kLiveFpOnly, MutantVerdict::kTceDropped,
                          MutantVerdict::kStillborn}) {
    EXPECT_EQ(ParseMutantVerdict(MutantVerdictName(v)), v);
  }
  EXPECT_FALSE(ParseMutantVerdict("killed"));
}

TEST(ReportTest, AverageKillsScore) {
  std::vector<CampaignRecord> records;
  int id = 0;
  for (int run = 0; run < 10; ++run) {
    int killed = run == 0 ? 112 : 113;
    for (int i = 0; i < 153; ++i) {
      records.push_back(Rec("run" + std::to_string(run), ++id,
                            i < killed ? MutantVerdict::kKilledGenuine : MutantVerdict::kLive,
                            i * 1.0));
    }
  }
  Report r = BuildReport(records);
  ASSERT_EQ(r.runs.size(), 10u);
  EXPECT_EQ(FormatScore(r.score), "73.79%");
  EXPECT_NEAR(*r.score, 112.9 / 153.0, 1e-12);
}

TEST(ReportTest, EmptyStore) {
  Report r = BuildReport({});
  EXPECT_FALSE(r.score);
  EXPECT_EQ(FormatScore(r.score), "n/a");
  EXPECT_TRUE(r.curve.empty());
  EXPECT_EQ(KillCurveCsv(r), "run_id,t_seconds,pct_killed\n");
}

TEST(ReportTest, ScoreIgnoresDroppedAndStillborn) {
  std::vector<CampaignRecord> records = {
      Rec("r", 1, MutantVerdict::kKilledGenuine, 2.0),
      Rec("r", 2, MutantVerdict::kLiveFpOnly),
      Rec("r", 3, MutantVerdict::kTceDropped),
      Rec("r", 4, MutantVerdict::kStillborn),
  };
  Report r = BuildReport(records);
  EXPECT_EQ(FormatScore(r.score), "50.00%");
  EXPECT_EQ(r.runs[0].total, 4u);
  EXPECT_EQ(r.runs[0].Fuzzed(), 2u);
}

TEST(ReportTest, KillCurveIsMonotoneAndBounded) {
  std::vector<CampaignRecord> records;
  const double times[] = {5, 0, 3, 3, 9, 1};
  for (int i = 0; i < 6; ++i) {
    records.push_back(Rec("a", i + 1, MutantVerdict::kKilledGenuine, times[i]));
  }
  records.push_back(Rec("a", 7, MutantVerdict::kLive));
  records.push_back(Rec("b", 8, MutantVerdict::kKilledGenuine, 4));
  Report r = BuildReport(records);
  double last_t = -1, last_pct = 0;
  std::string run;
  for (const auto& p : r.curve) {
    if (p.run_id != run) {
      run = p.run_id;
      last_t = -1;
      last_pct = 0;
    }
    EXPECT_GT(p.t_seconds, last_t);
    EXPECT_GE(p.pct_killed, last_pct);
    EXPECT_LE(p.pct_killed, 100.0);
    last_t = p.t_seconds;
    last_pct = p.pct_killed;
  }
  ASSERT_EQ(r.curve.size(), 6u);
  EXPECT_NEAR(r.curve[4].pct_killed, 600.0 / 7.0, 1e-9);
  EXPECT_EQ(r.curve[5].run_id, "b");
  EXPECT_DOUBLE_EQ(r.curve[5].pct_killed, 100.0);
  std::string csv = KillCurveCsv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "run_id,t_seconds,pct_killed");
  EXPECT_NE(csv.find("\na,3,57.1429\n"), std::string::npos);
}

TEST(ReportTest, AttributionCounts) {
  Report r = BuildReport({Rec("r", 1, MutantVerdict::kKilledGenuine, 0, fuzzcore::Origin::kSeed),
                          Rec("r", 2, MutantVerdict::kKilledGenuine, 1),
                          Rec("r", 3, MutantVerdict::kKilledGenuine, 2)});
  EXPECT_EQ(r.runs[0].seed_kills, 1u);
  EXPECT_EQ(r.runs[0].fuzzed_kills, 2u);
}

TEST(CompareTest, IdenticalStoresGiveOne) {
  std::vector<CampaignRecord> a;
  for (int i = 0; i < 12; ++i) {
    a.push_back(Rec("r", i + 1, i % 3 ? MutantVerdict::kKilledGenuine : MutantVerdict::kLive, i));
  }
  auto rows = CompareStores(a, a);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) EXPECT_DOUBLE_EQ(row.p, 1.0);
}

TEST(CompareTest, TablesFollowKillTimes) {
  std::vector<CampaignRecord> a, b;
  for (int i = 0; i < 10; ++i) a.push_back(Rec("a", i + 1, MutantVerdict::kKilledGenuine, 1));
  for (int i = 0; i < 10; ++i) b.push_back(Rec("b", i + 1, MutantVerdict::kLive));
  auto rows = CompareStores(a, b);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].killed_a, 10u);
  EXPECT_EQ(rows[0].live_a, 0u);
  EXPECT_EQ(rows[0].killed_b, 0u);
  EXPECT_EQ(rows[0].live_b, 10u);
  EXPECT_NEAR(rows[0].p, 2.0 / 184756.0, 1e-15);
  EXPECT_NE(FormatComparison(rows).find("t_seconds"), std::string::npos);
}

// Config.

TEST(ConfigTest, ParsesAndResolvesPaths) {
  CampaignConfig c = ParseConfig(R"({
    "run_id": "r7",
    "targets": [{"source": "clamp.c", "function": "clamp", "pointer_lengths": {"p": 4}}],
    "operators": ["ROR", "AOR"],
    "budget_seconds": 2.5,
    "max_execs": 100,
    "workers": 3,
    "rng_seed": 9,
    "runtime_dir": "rt",
    "abi": "i386",
    "checkpoint_channel": "stderr",
    "tce": {"enabled": false, "levels": ["-O1", "-O3"]},
    "denylist": "deny.txt",
    "cross_replay": true
  })",
                                 "/base");
  EXPECT_EQ(c.run_id, "r7");
  ASSERT_EQ(c.targets.size(), 1u);
  EXPECT_EQ(c.targets[0].source, "/base/clamp.c");
  EXPECT_EQ(c.targets[0].pointer_lengths.at("p"), 4u);
  EXPECT_EQ(c.operators, (mutagen::OperatorSet{mutagen::Operator::kRor, mutagen::Operator::kAor}));
  EXPECT_DOUBLE_EQ(c.budget_seconds, 2.5);
  EXPECT_EQ(c.max_execs, 100u);
  EXPECT_EQ(c.workers, 3);
  EXPECT_EQ(c.rng_seed, 9u);
  EXPECT_EQ(c.runtime_dir, "/base/rt");
  EXPECT_EQ(c.output_dir, "/base/motif-out");
  EXPECT_EQ(c.abi.name, c_model::AbiProfile::I386().name);
  EXPECT_EQ(c.checkpoint_channel, driver_synth::CheckpointChannel::kStderr);
  EXPECT_FALSE(c.tce);
  EXPECT_EQ(c.tce_levels, (std::vector<std::string>{"-O1", "-O3"}));
  EXPECT_EQ(c.denylist, std::filesystem::path("/base/deny.txt"));
  EXPECT_TRUE(c.cross_replay);
}

TEST(ConfigTest, RuntimeDirDefaultsToShippedSources) {
  CampaignConfig c = ParseConfig(R"({"targets": [{"source": "a.c", "function": "f"}]})", "/base");
  EXPECT_EQ(c.runtime_dir, DefaultRuntimeDir());
  EXPECT_TRUE(std::filesystem::exists(c.runtime_dir / "motif_runtime.c"));
  EXPECT_TRUE(std::filesystem::exists(c.runtime_dir / "motif_runtime.h"));
}

TEST(ConfigTest, RejectsBadValues) {
  const char* bad[] = {
      R"({"targets": []})",
      R"({"targets": [{"source": "a.c", "function": "f"}], "budget_seconds": 0})",
      R"({"targets": [{"source": "a.c", "function": "f"}], "workers": 0})",
      R"({"targets": [{"source": "a.c", "function": "f"}], "operators": ["XYZ"]})",
      R"({"targets": [{"source": "a.c", "function": "f"}], "bogus": 1})",
      R"({"targets": [{"source": "a.c", "function": "f"}], "abi": "arm"})",
      R"({"targets": [{"source": "a.c", "function": "f"}], "workers": "two"})",
      R"([1, 2])",
      R"({"targets": )",
  };
  for (const char* text : bad) {
    try {
      ParseConfig(text, "/");
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig) << text;
    }
  }
}

TEST(ConfigTest, Denylist) {
  ScratchDir dir("motif-deny");
  WriteFileText(dir / "deny.txt", "# equivalent by hand\n3\n  12  # why not\n\n");
  EXPECT_EQ(LoadDenylist(dir / "deny.txt"), (std::set<int>{3, 12}));
  WriteFileText(dir / "bad.txt", "3x\n");
  EXPECT_THROW(LoadDenylist(dir / "bad.txt"), Error);
}

// End-to-end campaigns.

class CampaignRunTest : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!HaveCCompiler()) GTEST_SKIP() << "no C compiler";
  }

  CampaignConfig Config(const std::string& file, const std::string& function,
                        const std::string& out) {
    json j = {
        {"run_id", "t"},
        {"targets", {{{"source", file}, {"function", function}}}},
        {"budget_seconds", 30},
        {"max_execs", 300},
        {"rng_seed", 4},
        {"runtime_dir", RuntimeDir().string()},
        {"output_dir", (dir_ / out).string()},
    };
    return ParseConfig(j.dump(), CorpusDir());
  }

  static void CheckAccounting(const CampaignResult& r, std::size_t generated) {
    std::map<MutantVerdict, std::size_t> n;
    std::set<int> ids;
    for (const auto& rec : r.records) {
      ++n[rec.verdict];
      ids.insert(rec.mutant_id);
    }
    EXPECT_EQ(ids.size(), r.records.size());
    EXPECT_EQ(n[MutantVerdict::kKilledGenuine] + n[MutantVerdict::kLive] +
                  n[MutantVerdict::kLiveFpOnly] + n[MutantVerdict::kTceDropped] +
                  n[MutantVerdict::kStillborn],
              generated);
  }

  ScratchDir dir_{"motif-campaign"};
};

TEST_F(CampaignRunTest, AccountingAttributionAndStore) {
  CampaignConfig c = Config("sign8.c", "sign8", "out");
  c.workers = 2;
  CampaignPlan plan = PlanCampaign(c);
  CampaignResult r = RunCampaign(c);
  EXPECT_TRUE(r.errors.empty());
  ASSERT_GT(plan.MutantCount(), 10u);
  CheckAccounting(r, plan.MutantCount());
  EXPECT_TRUE(std::is_sorted(r.records.begin(), r.records.end(),
                             [](const auto& a, const auto& b) { return a.mutant_id < b.mutant_id; }));

  std::vector<Bytes> seeds;
  for (int i = 1; i <= 3; ++i) {
    auto p = c.output_dir / "sign8" / "corpus" / ("seed_" + std::to_string(i));
    if (std::filesystem::exists(p)) seeds.push_back(ReadFileBytes(p));
  }
  ASSERT_EQ(seeds.size(), 3u);
  std::size_t killed = 0;
  for (const auto& rec : r.records) {
    if (rec.verdict != MutantVerdict::kKilledGenuine) continue;
    ++killed;
    ASSERT_FALSE(rec.killing_inputs.empty());
    Bytes first = ReadFileBytes(c.output_dir / rec.killing_inputs.front());
    bool is_seed = std::find(seeds.begin(), seeds.end(), first) != seeds.end();
    EXPECT_EQ(rec.kill_origin == fuzzcore::Origin::kSeed, is_seed) << rec.mutant_id;
  }
  EXPECT_GT(killed, 5u);

  auto stored = LoadStore(c.output_dir);
  ASSERT_EQ(stored.size(), r.records.size());
  for (std::size_t i = 0; i < stored.size(); ++i) {
    EXPECT_EQ(RecordLine(stored[i]), RecordLine(r.records[i]));
  }
  json summary = json::parse(ReadFileText(r.summary_path));
  EXPECT_EQ(summary["generated"], plan.MutantCount());
  EXPECT_EQ(summary["records"].size(), r.records.size());
}

std::string WithoutTimes(const std::vector<CampaignRecord>& records) {
  std::string out;
  for (CampaignRecord r : records) {
    r.elapsed_s = 0;
    if (r.first_kill_s) r.first_kill_s = 0;
    out += RecordLine(r) + "\n";
  }
  return out;
}

TEST_F(CampaignRunTest, SameSeedSameStore) {
  CampaignConfig a = Config("sign8.c", "sign8", "a");
  a.operators = {mutagen::Operator::kRor, mutagen::Operator::kIcr};
  a.workers = 2;
  CampaignConfig b = a;
  b.output_dir = dir_ / "b";
  b.workers = 1;
  auto ra = RunCampaign(a);
  auto rb = RunCampaign(b);
  ASSERT_FALSE(ra.records.empty());
  EXPECT_EQ(WithoutTimes(ra.records), WithoutTimes(rb.records));
  EXPECT_EQ(WithoutTimes(LoadStore(a.output_dir)), WithoutTimes(LoadStore(b.output_dir)));
}

TEST_F(CampaignRunTest, FalsePositivesOnStaticCounter) {
  CampaignConfig c = Config("counter.c", "next_ticket", "out");
  c.max_false_positives = 3;
  CampaignPlan plan = PlanCampaign(c);
  CampaignResult r = RunCampaign(c);
  EXPECT_TRUE(r.errors.empty());
  CheckAccounting(r, plan.MutantCount());
  std::size_t with_kills = 0;
  for (const auto& rec : r.records) {
    EXPECT_NE(rec.verdict, MutantVerdict::kKilledGenuine) << rec.mutant_id;
    if (rec.false_positives > 0) {
      ++with_kills;
      EXPECT_EQ(rec.verdict, MutantVerdict::kLiveFpOnly) << rec.mutant_id;
    } else if (rec.verdict == MutantVerdict::kLive) {
      // Dropping the increment makes both calls return base + 1.
      EXPECT_EQ(rec.op, "SDL") << rec.mutant_id;
    }
  }
  EXPECT_GT(with_kills, 0u);
}

TEST_F(CampaignRunTest, DenylistAndTceDrops) {
  CampaignConfig c = Config("scale.c", "scale", "out");
  WriteFileText(dir_ / "deny.txt", "1\n");
  c.denylist = dir_ / "deny.txt";
  CampaignPlan plan = PlanCampaign(c);
  ASSERT_FALSE(plan.targets[0].mutants.empty());
  EXPECT_EQ(plan.targets[0].denylisted, (std::set<int>{1}));
  EXPECT_NE(DescribePlan(plan).find("(denylisted)"), std::string::npos);
  CampaignResult r = RunCampaign(c);
  CheckAccounting(r, plan.MutantCount());
  ASSERT_FALSE(r.records.empty());
  EXPECT_EQ(r.records[0].verdict, MutantVerdict::kTceDropped);
  EXPECT_EQ(r.records[0].reason, "denylisted");
  bool saw_equivalent = false;
  for (const auto& rec : r.records) {
    if (rec.reason == "tce-equivalent") saw_equivalent = true;
  }
  EXPECT_TRUE(saw_equivalent);
}

TEST_F(CampaignRunTest, ZeroMutantsIsASuccess) {
  WriteFileText(dir_ / "ident.c", "int ident(int x) {\n  return x;\n}\n");
  json j = {{"targets", {{{"source", (dir_ / "ident.c").string()}, {"function", "ident"}}}},
            {"operators", {"ROR"}},
            {"runtime_dir", RuntimeDir().string()},
            {"output_dir", (dir_ / "out").string()}};
  CampaignResult r = RunCampaign(ParseConfig(j.dump(), dir_.path()));
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.errors.empty());
  EXPECT_TRUE(LoadStore(dir_ / "out").empty());
}

TEST_F(CampaignRunTest, MissingCompiler) {
  CampaignConfig c = Config("clamp.c", "clamp", "out");
  c.build_template = "motif-no-such-cc -o {out} {src}";
  try {
    RunCampaign(c);
    FAIL() << "expected CompilerUnavailable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCompilerUnavailable);
  }
}

TEST_F(CampaignRunTest, UnparseableTargetIsReportedNotFatal) {
  CampaignConfig c = Config("clamp.c", "no_such_function", "out");
  CampaignResult r = RunCampaign(c);
  EXPECT_TRUE(r.records.empty());
  ASSERT_EQ(r.errors.size(), 1u);
}

TEST_F(CampaignRunTest, VerifyKillOnTwoDrivers) {
  CampaignConfig c = Config("counter.c", "next_ticket", "out");
  c.max_execs = 20;
  c.operators = {mutagen::Operator::kAor};
  c.tce = false;
  RunCampaign(c);
  fuzzcore::Executor fp(c.output_dir / "next_ticket" / "fp_driver", dir_ / "fp");
  EXPECT_EQ(VerifyKill({1, 0, 0, 0}, fp), KillCheck::kFalsePositive);

  CampaignConfig d = Config("clamp.c", "clamp", "clamp_out");
  d.max_execs = 20;
  d.operators = {mutagen::Operator::kRor};
  d.tce = false;
  RunCampaign(d);
  fuzzcore::Executor fp2(d.output_dir / "clamp" / "fp_driver", dir_ / "fp2");
  EXPECT_EQ(VerifyKill(Bytes(12, 0x7F), fp2), KillCheck::kGenuine);
}

}  // namespace
}  // namespace motif::campaign
