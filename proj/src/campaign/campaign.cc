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

#include "motif/campaign/campaign.h"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "motif/c_model/parser.h"
#include "motif/campaign/report.h"
#include "motif/driver_synth/driver_synth.h"
#include "motif/error.h"
#include "motif/fuzzcore/fuzzer.h"
#include "motif/mutagen/tce.h"
#include "motif/seedgen/seedgen.h"
#include "motif/util/subprocess.h"

namespace motif::campaign {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr std::size_t kMaxReason = 600;

std::string Clip(std::string s) {
  if (s.size() > kMaxReason) s = s.substr(0, kMaxReason) + "...";
  return s;
}

int LineOf(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::vector<std::string> ExpandBuild(const std::string& tmpl, const fs::path& runtime,
                                     const fs::path& out, const std::vector<fs::path>& sources) {
  std::vector<std::string> argv;
  for (std::string word : SplitCommandLine(tmpl)) {
    if (word == "{src}") {
      for (const auto& s : sources) argv.push_back(s.string());
      continue;
    }
    auto replace = [&](const std::string& key, const std::string& value) {
      for (std::size_t p = word.find(key); p != std::string::npos; p = word.find(key, p + value.size())) {
        word.replace(p, key.size(), value);
      }
    };
    replace("{runtime}", runtime.string());
    replace("{out}", out.string());
    if (!word.empty()) argv.push_back(word);
  }
  return argv;
}

std::optional<std::string> Build(const CampaignConfig& config, const fs::path& out,
                                 const std::vector<fs::path>& sources) {
  ProcessOptions p;
  p.argv = ExpandBuild(config.build_template, config.runtime_dir, out, sources);
  p.capture_output = true;
  p.timeout = std::chrono::seconds(120);
  ProcessResult r = RunProcess(p);
  if (r.Succeeded()) return std::nullopt;
  return r.output.empty() ? std::string("compiler failed") : r.output;
}

struct FunctionContext {
  const TargetPlan* plan = nullptr;
  fs::path dir;
  std::string fuzz_driver;
  std::uint64_t consumed = 0;
  fs::path fp_exe;
  std::vector<Bytes> seeds;
  std::mutex pool_mutex;
  std::vector<Bytes> kill_pool;
};

struct Job {
  FunctionContext* ctx;
  const mutagen::Mutant* mutant;
};

class Runner {
 public:
  explicit Runner(const CampaignConfig& config) : config_(config) {}

  CampaignResult Run() {
    CheckEnvironment();
    plan_ = PlanCampaign(config_);
    fs::create_directories(config_.output_dir);
    result_.results_path = config_.output_dir / kResultsFile;
    result_.summary_path = config_.output_dir / kSummaryFile;
    fs::remove(result_.results_path);

    std::set<std::string> used_dirs;
    for (const TargetPlan& tp : plan_.targets) {
      if (!tp.error.empty()) {
        Fail(tp.target.function + ": " + tp.error);
        continue;
      }
      std::string name = tp.target.function;
      while (!used_dirs.insert(name).second) name += "_";
      PrepareTarget(tp, config_.output_dir / name);
    }
    RunJobs();
    Finish();
    return std::move(result_);
  }

 private:
  void CheckEnvironment() {
    ValidateConfig(config_);
    auto argv = ExpandBuild(config_.build_template, config_.runtime_dir, "a.out", {});
    if (argv.empty() || !FindInPath(argv[0])) {
      throw Error(ErrorCode::kCompilerUnavailable,
                  "compiler not found: " + (argv.empty() ? std::string("<empty>") : argv[0]));
    }
    for (const char* f : {"motif_runtime.h", "motif_runtime.c"}) {
      if (!fs::exists(config_.runtime_dir / f)) {
        throw Error(ErrorCode::kInvalidConfig,
                    "runtime_dir does not contain " + std::string(f) + ": " +
                        config_.runtime_dir.string());
      }
    }
  }

  void Fail(const std::string& message) {
    std::lock_guard lock(mutex_);
    result_.errors.push_back(message);
  }

  CampaignRecord Base(const TargetPlan& tp, const mutagen::Mutant& m) const {
    CampaignRecord r;
    r.run_id = config_.run_id;
    r.mutant_id = m.id;
    r.function = tp.target.function;
    r.source = tp.target.source.filename().string();
    r.op = std::string(mutagen::OperatorName(m.op));
    r.line = LineOf(tp.source.text, m.site.begin);
    r.original = m.original;
    r.replacement = m.replacement;
    return r;
  }

  void Emit(CampaignRecord record) {
    std::lock_guard lock(mutex_);
    AppendRecord(result_.results_path, record);
    result_.records.push_back(std::move(record));
  }

  void Drop(const TargetPlan& tp, const mutagen::Mutant& m, MutantVerdict verdict,
            std::string reason) {
    CampaignRecord r = Base(tp, m);
    r.verdict = verdict;
    r.reason = Clip(std::move(reason));
    if (m.status == mutagen::MutantStatus::kTceDuplicate) r.duplicate_of = m.duplicate_of;
    Emit(std::move(r));
  }

  driver_synth::DriverSpec SpecFor(const TargetPlan& tp) const {
    driver_synth::DriverSpec spec;
    spec.env = c_model::ParseDeclarations(tp.source.text);
    const c_model::FunctionSignature* sig = spec.env.FindSignature(tp.target.function);
    if (sig == nullptr) {
      throw Error(ErrorCode::kParseFailure, "no declaration of " + tp.target.function);
    }
    spec.signature = *sig;
    spec.abi = config_.abi;
    spec.array_default_length = config_.array_default_length;
    spec.pointer_lengths = config_.pointer_lengths;
    for (const auto& [k, v] : tp.target.pointer_lengths) spec.pointer_lengths[k] = v;
    auto snippet = tp.target.setup_snippet ? tp.target.setup_snippet : config_.setup_snippet;
    if (snippet) spec.setup_snippet = ReadFileText(*snippet);
    spec.checkpoint_channel = config_.checkpoint_channel;
    spec.excluded = tp.target.excluded;
    return spec;
  }

  void PrepareTarget(const TargetPlan& tp, const fs::path& dir) {
    fs::create_directories(dir);
    std::vector<const mutagen::Mutant*> pending;
    std::vector<mutagen::Mutant> candidates;
    for (const auto& m : tp.mutants) {
      if (tp.denylisted.count(m.id)) {
        Drop(tp, m, MutantVerdict::kTceDropped, "denylisted");
      } else {
        candidates.push_back(m);
      }
    }

    if (config_.tce && !candidates.empty()) {
      mutagen::TceOptions tce;
      tce.compile_template = config_.tce_template;
      tce.optimization_levels = config_.tce_levels;
      tce.work_dir = dir / "tce";
      tce.jobs = config_.workers;
      try {
        mutagen::TceFilter(tp.source, candidates, tce);
      } catch (const Error& e) {
        Fail(tp.target.function + ": " + e.what());
        for (auto& m : candidates) {
          m.status = mutagen::MutantStatus::kStillborn;
          m.diagnostic = e.what();
        }
      }
    }
    auto& kept = kept_.emplace_back(std::move(candidates));
    for (const auto& m : kept) {
      switch (m.status) {
        case mutagen::MutantStatus::kTceEquivalent:
          Drop(tp, m, MutantVerdict::kTceDropped, "tce-equivalent");
          break;
        case mutagen::MutantStatus::kTceDuplicate:
          Drop(tp, m, MutantVerdict::kTceDropped, "tce-duplicate");
          break;
        case mutagen::MutantStatus::kStillborn:
          Drop(tp, m, MutantVerdict::kStillborn, m.diagnostic);
          break;
        default:
          pending.push_back(&m);
      }
    }
    if (pending.empty()) return;

    auto ctx = std::make_unique<FunctionContext>();
    ctx->plan = &tp;
    ctx->dir = dir;
    std::string failure;
    try {
      driver_synth::DriverSpec spec = SpecFor(tp);
      auto fuzz = driver_synth::GenerateFuzzingDriver(spec);
      auto fp = driver_synth::GenerateFalsePositiveDriver(spec);
      auto test = driver_synth::GenerateTestDriver(spec);
      ctx->fuzz_driver = fuzz.source;
      ctx->consumed = fuzz.consumed_input_bytes;
      WriteFileText(dir / "driver.fuzz.c", fuzz.source);
      WriteFileText(dir / "driver.fp.c", fp.source);
      WriteFileText(dir / "driver.test.c", test.source);
      WriteFileText(dir / "subject.c", tp.source.text);
      seedgen::SeedOptions so;
      so.timestamp_aliases = config_.timestamp_types;
      auto seeds = seedgen::GenerateSeeds(spec, so);
      seedgen::WriteSeeds(dir / "corpus", seeds);
      for (auto& s : seeds) ctx->seeds.push_back(std::move(s.bytes));
      ctx->fp_exe = dir / "fp_driver";
      auto diag = Build(config_, ctx->fp_exe,
                        {dir / "driver.fp.c", dir / "subject.c",
                         config_.runtime_dir / "motif_runtime.c"});
      if (diag) failure = "false-positive driver build failed: " + *diag;
    } catch (const Error& e) {
      failure = e.what();
    }
    if (!failure.empty()) {
      Fail(tp.target.function + ": " + Clip(failure));
      for (const auto* m : pending) Drop(tp, *m, MutantVerdict::kStillborn, failure);
      return;
    }
    for (const auto* m : pending) jobs_.push_back({ctx.get(), m});
    contexts_.push_back(std::move(ctx));
  }

  void RunJobs() {
    std::sort(jobs_.begin(), jobs_.end(),
              [](const Job& a, const Job& b) { return a.mutant->id < b.mutant->id; });
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < jobs_.size(); i = next++) RunMutant(jobs_[i]);
    };
    int n = std::max(1, std::min<int>(config_.workers, static_cast<int>(jobs_.size())));
    std::vector<std::thread> threads;
    for (int i = 1; i < n; ++i) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
  }

  void RunMutant(const Job& job) {
    FunctionContext& ctx = *job.ctx;
    const TargetPlan& tp = *ctx.plan;
    const mutagen::Mutant& m = *job.mutant;
    const std::string mname = "m" + std::to_string(m.id);
    const fs::path mdir = ctx.dir / mname;
    try {
      fs::create_directories(mdir);
      WriteFileText(mdir / "unit.c", mutagen::MutantUnit(tp.source, m));
      fs::path exe = mdir / "fuzz_driver";
      auto diag = Build(config_, exe,
                        {ctx.dir / "driver.fuzz.c", mdir / "unit.c",
                         config_.runtime_dir / "motif_runtime.c"});
      if (diag) {
        Drop(tp, m, MutantVerdict::kStillborn, "build failed: " + *diag);
        return;
      }
      fuzzcore::ExecutorOptions eo;
      eo.timeout = std::chrono::milliseconds(config_.exec_timeout_ms);
      eo.rand_seed = config_.rng_seed;
      eo.channel = config_.checkpoint_channel == driver_synth::CheckpointChannel::kStderr
                       ? fuzzcore::LogChannel::kStderr
                       : fuzzcore::LogChannel::kFile;
      fuzzcore::Executor ex(exe, mdir / "exec", eo);
      fuzzcore::Executor fp(ctx.fp_exe, mdir / "fp", eo);

      std::vector<Bytes> seeds = ctx.seeds;
      if (config_.cross_replay) {
        std::lock_guard lock(ctx.pool_mutex);
        seeds.insert(seeds.end(), ctx.kill_pool.begin(), ctx.kill_pool.end());
      }
      fuzzcore::FuzzOptions fo;
      fo.budget.time = std::chrono::duration<double>(config_.budget_seconds);
      fo.budget.max_execs = config_.max_execs;
      fo.rng_seed = config_.rng_seed ^ (static_cast<std::uint64_t>(m.id) * 0x9E3779B97F4A7C15ULL);
      fo.stop_at_first_kill = config_.stop_at_first_kill;
      fo.consumed_bytes = ctx.consumed;
      fo.max_false_positives = config_.max_false_positives;
      fo.kill_dir = mdir / "kills";
      fo.kill_filter = [&fp](const Bytes& input) {
        return VerifyKill(input, fp) == KillCheck::kGenuine;
      };
      fuzzcore::FuzzOutcome out = fuzzcore::FuzzMutant(ex, seeds, fo);

      CampaignRecord r = Base(tp, m);
      r.executions = out.executions;
      r.false_positives = out.false_positives;
      r.queue_size = out.queue.size();
      r.elapsed_s = out.elapsed_s;
      if (const fuzzcore::KillRecord* k = out.FirstGenuineKill()) {
        r.verdict = MutantVerdict::kKilledGenuine;
        r.first_kill_s = k->time_s;
        r.first_kill_exec = k->exec_index;
        r.kill_verdict = std::string(fuzzcore::VerdictName(k->verdict));
        bool from_seed = std::find(ctx.seeds.begin(), ctx.seeds.end(), k->input) != ctx.seeds.end();
        r.kill_origin = from_seed ? fuzzcore::Origin::kSeed : fuzzcore::Origin::kFuzzed;
        fs::path rel = fs::relative(mdir / "kills", config_.output_dir);
        for (const auto& kill : out.kills) {
          if (kill.genuine) {
            r.killing_inputs.push_back((rel / ("kill_" + std::to_string(kill.index) + ".bin")).string());
          }
        }
        if (config_.cross_replay) {
          std::lock_guard lock(ctx.pool_mutex);
          if (std::find(ctx.kill_pool.begin(), ctx.kill_pool.end(), k->input) == ctx.kill_pool.end()) {
            ctx.kill_pool.push_back(k->input);
          }
        }
      } else if (out.false_positives > 0) {
        r.verdict = MutantVerdict::kLiveFpOnly;
      } else {
        r.verdict = MutantVerdict::kLive;
      }
      Emit(std::move(r));
    } catch (const std::exception& e) {
      Fail(tp.target.function + " mutant " + std::to_string(m.id) + ": " + e.what());
      Drop(tp, m, MutantVerdict::kStillborn, std::string("error: ") + e.what());
    }
  }

  void Finish() {
    std::sort(result_.records.begin(), result_.records.end(),
              [](const CampaignRecord& a, const CampaignRecord& b) {
                return a.mutant_id < b.mutant_id;
              });
    std::string text;
    json records = json::array();
    for (const auto& r : result_.records) {
      std::string line = RecordLine(r);
      text += line + "\n";
      records.push_back(json::parse(line));
    }
    fs::path tmp = result_.results_path;
    tmp += ".tmp";
    WriteFileText(tmp, text);
    fs::rename(tmp, result_.results_path);

    Report report = BuildReport(result_.records);
    json counts = json::object();
    for (MutantVerdict v : {MutantVerdict::kKilledGenuine, MutantVerdict::kLive,
                            MutantVerdict::kLiveFpOnly, MutantVerdict::kTceDropped,
                            MutantVerdict::kStillborn}) {
      std::uint64_t n = report.runs.empty() ? 0 : report.runs.front().Count(v);
      counts[std::string(MutantVerdictName(v))] = n;
    }
    json summary = {
        {"run_id", config_.run_id},
        {"generated", plan_.MutantCount()},
        {"counts", counts},
        {"mutation_score", report.score ? json(*report.score) : json(nullptr)},
        {"mutation_score_text", FormatScore(report.score)},
        {"errors", result_.errors},
        {"records", records},
    };
    WriteFileText(result_.summary_path, summary.dump(2) + "\n");
  }

  const CampaignConfig& config_;
  CampaignPlan plan_;
  CampaignResult result_;
  std::mutex mutex_;
  std::vector<std::vector<mutagen::Mutant>> kept_;
  std::vector<std::unique_ptr<FunctionContext>> contexts_;
  std::vector<Job> jobs_;
};

}  // namespace

KillCheck VerifyKill(const Bytes& input, fuzzcore::Executor& fp_executor) {
  fuzzcore::ExecOutcome o = fp_executor.Run(input);
  return fuzzcore::Classify(o) == fuzzcore::Verdict::kSurvived ? KillCheck::kGenuine
                                                               : KillCheck::kFalsePositive;
}

std::size_t CampaignPlan::MutantCount() const {
  std::size_t n = 0;
  for (const auto& t : targets) n += t.mutants.size();
  return n;
}

CampaignPlan PlanCampaign(const CampaignConfig& config) {
  ValidateConfig(config);
  std::set<int> deny;
  if (config.denylist) deny = LoadDenylist(*config.denylist);
  CampaignPlan plan;
  int next_id = 1;
  for (const Target& t : config.targets) {
    TargetPlan tp;
    tp.target = t;
    tp.source.path = t.source.filename().string();
    try {
      tp.source.text = ReadFileText(t.source);
      c_model::TypeEnvironment env = c_model::ParseDeclarations(tp.source.text);
      const c_model::FunctionSignature* sig = env.FindSignature(t.function);
      if (sig != nullptr && sig->is_static) {
        throw Error(ErrorCode::kUnsupportedSignature,
                    "static function " + t.function + " cannot be linked against its driver");
      }
      auto sites = mutagen::EnumerateSites(tp.source, t.function, config.operators);
      tp.mutants = mutagen::GenerateMutants(tp.source, sites, config.operators, next_id);
      next_id += static_cast<int>(tp.mutants.size());
      for (const auto& m : tp.mutants) {
        if (deny.count(m.id)) tp.denylisted.insert(m.id);
      }
    } catch (const Error& e) {
      tp.error = e.what();
      tp.mutants.clear();
    }
    plan.targets.push_back(std::move(tp));
  }
  return plan;
}

std::string DescribePlan(const CampaignPlan& plan) {
  std::ostringstream out;
  out << "campaign plan: " << plan.targets.size() << " target(s), " << plan.MutantCount()
      << " mutant(s)\n";
  for (const auto& tp : plan.targets) {
    out << tp.target.source.string() << " " << tp.target.function << ": ";
    if (!tp.error.empty()) {
      out << "error: " << tp.error << "\n";
      continue;
    }
    out << tp.mutants.size() << " mutant(s)";
    if (!tp.denylisted.empty()) out << ", " << tp.denylisted.size() << " denylisted";
    out << "\n";
    for (const auto& m : tp.mutants) {
      out << "  " << m.id << " " << mutagen::OperatorName(m.op) << " line "
          << LineOf(tp.source.text, m.site.begin) << ": " << m.original << " -> "
          << m.replacement << (tp.denylisted.count(m.id) ? " (denylisted)" : "") << "\n";
    }
  }
  return out.str();
}

std::string PlanJson(const CampaignPlan& plan) {
  json targets = json::array();
  for (const auto& tp : plan.targets) {
    json mutants = json::array();
    for (const auto& m : tp.mutants) {
      mutants.push_back({{"id", m.id},
                         {"operator", mutagen::OperatorName(m.op)},
                         {"line", LineOf(tp.source.text, m.site.begin)},
                         {"original", m.original},
                         {"replacement", m.replacement},
                         {"denylisted", tp.denylisted.count(m.id) > 0}});
    }
    targets.push_back({{"source", tp.target.source.string()},
                       {"function", tp.target.function},
                       {"error", tp.error.empty() ? json(nullptr) : json(tp.error)},
                       {"mutants", mutants}});
  }
  return json({{"mutants", plan.MutantCount()}, {"targets", targets}}).dump(2);
}

CampaignResult RunCampaign(const CampaignConfig& config) {
  Runner runner(config);
  return runner.Run();
}

}  // namespace motif::campaign
