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

#include "cli.h"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "motif/c_model/layout.h"
#include "motif/c_model/parser.h"
#include "motif/c_model/probe.h"
#include "motif/c_model/render.h"
#include "motif/campaign/campaign.h"
#include "motif/campaign/config.h"
#include "motif/campaign/record.h"
#include "motif/campaign/report.h"
#include "motif/driver_synth/driver_synth.h"
#include "motif/error.h"
#include "motif/fuzzcore/executor.h"
#include "motif/fuzzcore/fuzzer.h"
#include "motif/mutagen/mutagen.h"
#include "motif/mutagen/tce.h"
#include "motif/seedgen/seedgen.h"
#include "motif/util/files.h"
#include "motif/util/subprocess.h"

namespace motif::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

c_model::AbiProfile AbiNamed(const std::string& name) {
  if (name == "lp64") return c_model::AbiProfile::Lp64();
  if (name == "i386") return c_model::AbiProfile::I386();
  throw UsageError("unknown abi '" + name + "'");
}

std::map<std::string, std::uint64_t> LengthPairs(const std::vector<std::string>& pairs) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& p : pairs) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected NAME=N, got '" + p + "'");
    try {
      std::size_t used = 0;
      unsigned long long n = std::stoull(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1 || n == 0) throw std::invalid_argument(p);
      out[p.substr(0, eq)] = n;
    } catch (const std::logic_error&) {
      throw UsageError("expected NAME=N, got '" + p + "'");
    }
  }
  return out;
}

mutagen::OperatorSet Operators(const std::vector<std::string>& names) {
  if (names.empty()) return mutagen::AllOperators();
  mutagen::OperatorSet ops;
  for (const auto& n : names) {
    auto op = mutagen::ParseOperator(n);
    if (!op) throw UsageError("unknown operator '" + n + "'");
    ops.insert(*op);
  }
  return ops;
}

int LineOf(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

struct DriverArgs {
  std::string file;
  std::string function;
  std::vector<std::string> pointer_lengths;
  std::uint64_t array_default_length = 100;
  std::string abi = "lp64";
  std::string setup;
  bool stderr_channel = false;
  std::vector<std::string> excluded;

  void Register(CLI::App* cmd) {
    cmd->add_option("file", file, "C source file")->required();
    cmd->add_option("-f,--function", function, "Function under test")->required();
    cmd->add_option("--pointer-length", pointer_lengths, "Pointed element count, NAME=N");
    cmd->add_option("--array-default-length", array_default_length,
                    "Element count for unsized array parameters");
    cmd->add_option("--abi", abi, "lp64 or i386");
    cmd->add_option("--setup", setup, "File with C statements run before each call");
    cmd->add_flag("--stderr", stderr_channel, "Write checkpoints to stderr");
    cmd->add_option("--exclude", excluded, "Parameter left out of the comparison");
  }

  driver_synth::DriverSpec Spec() const {
    driver_synth::DriverSpec spec;
    spec.env = c_model::ParseDeclarations(ReadFileText(file));
    const c_model::FunctionSignature* sig = spec.env.FindSignature(function);
    if (sig == nullptr) throw Error(ErrorCode::kParseFailure, "no declaration of " + function);
    spec.signature = *sig;
    spec.abi = AbiNamed(abi);
    spec.array_default_length = array_default_length;
    spec.pointer_lengths = LengthPairs(pointer_lengths);
    if (!setup.empty()) spec.setup_snippet = ReadFileText(setup);
    if (stderr_channel) spec.checkpoint_channel = driver_synth::CheckpointChannel::kStderr;
    spec.excluded.insert(excluded.begin(), excluded.end());
    return spec;
  }
};

// parse

int CmdParse(const std::string& file, const std::string& abi_name, bool as_json,
             std::ostream& out) {
  c_model::TypeEnvironment env = c_model::ParseDeclarations(ReadFileText(file));
  c_model::AbiProfile abi = AbiNamed(abi_name);
  json types = json::array();
  std::ostringstream text;
  for (const auto& e : env.entries()) {
    c_model::TypeRef t;
    if (e.kind == c_model::TypeEnvironment::EntryKind::kTypedef) {
      t = env.FindTypedef(e.name);
    } else {
      std::string_view n = e.name;
      c_model::TypeKind k = n.rfind("struct ", 0) == 0  ? c_model::TypeKind::kStruct
                            : n.rfind("union ", 0) == 0 ? c_model::TypeKind::kUnion
                                                        : c_model::TypeKind::kEnum;
      t = env.FindTag(k, n.substr(n.find(' ') + 1));
    }
    json entry = {{"name", e.name},
                  {"kind", e.kind == c_model::TypeEnvironment::EntryKind::kTypedef ? "typedef"
                                                                                    : "tag"}};
    text << e.name;
    try {
      c_model::Layout l = c_model::LayoutOf(t, env, abi);
      entry["size"] = l.size;
      entry["alignment"] = l.alignment;
      text << ": size " << l.size << ", alignment " << l.alignment << "\n";
    } catch (const Error& err) {
      entry["error"] = err.what();
      text << ": " << err.what() << "\n";
    }
    types.push_back(entry);
  }
  json functions = json::array();
  for (const auto& name : env.signature_order()) {
    const auto* sig = env.FindSignature(name);
    std::string proto = c_model::RenderPrototype(*sig);
    functions.push_back({{"name", name},
                         {"prototype", proto},
                         {"defined", env.FindDefinition(name) != nullptr}});
    text << proto << "\n";
  }
  json diagnostics = json::array();
  for (const auto& d : env.diagnostics()) {
    diagnostics.push_back({{"code", ErrorCodeName(d.code)},
                           {"location", d.location.ToString()},
                           {"message", d.message}});
    text << "diagnostic " << d.location.ToString() << ": " << d.message << "\n";
  }
  if (as_json) {
    out << json({{"types", types}, {"functions", functions}, {"diagnostics", diagnostics}}).dump(2)
        << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

// mutate

int CmdMutate(const std::string& file, const std::string& function,
              const std::vector<std::string>& op_names, const std::string& out_dir, bool tce,
              bool as_json, std::ostream& out) {
  mutagen::SourceFile source{fs::path(file).filename().string(), ReadFileText(file)};
  auto ops = Operators(op_names);
  auto sites = mutagen::EnumerateSites(source, function, ops);
  auto mutants = mutagen::GenerateMutants(source, sites, ops);
  if (tce) {
    mutagen::TceOptions options;
    fs::path work = out_dir.empty() ? fs::temp_directory_path() / "motif-tce" : fs::path(out_dir) / "tce";
    options.work_dir = work;
    mutagen::TceFilter(source, mutants, options);
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto& m : mutants) {
      WriteFileText(fs::path(out_dir) / mutagen::MutantFileName(m), mutagen::EditedSource(m));
    }
  }
  json list = json::array();
  for (const auto& m : mutants) {
    int line = LineOf(source.text, m.site.begin);
    json j = {{"id", m.id},
              {"operator", mutagen::OperatorName(m.op)},
              {"function", m.site.function},
              {"line", line},
              {"begin", m.site.begin},
              {"end", m.site.end},
              {"original", m.original},
              {"replacement", m.replacement},
              {"status", mutagen::MutantStatusName(m.status)},
              {"file", mutagen::MutantFileName(m)}};
    if (m.duplicate_of) j["duplicate_of"] = *m.duplicate_of;
    list.push_back(j);
    if (!as_json) {
      out << m.id << " " << mutagen::OperatorName(m.op) << " line " << line << ": " << m.original
          << " -> " << m.replacement;
      if (tce) out << " [" << mutagen::MutantStatusName(m.status) << "]";
      out << "\n";
    }
  }
  if (as_json) out << list.dump(2) << "\n";
  return kExitOk;
}

// drivers

int CmdDrivers(const DriverArgs& args, const std::string& out_dir, bool as_json,
               std::ostream& out) {
  driver_synth::DriverSpec spec = args.Spec();
  fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  json files = json::array();
  std::uint64_t consumed = 0;
  for (auto kind : {driver_synth::DriverKind::kFuzzing, driver_synth::DriverKind::kFalsePositive,
                    driver_synth::DriverKind::kTest}) {
    driver_synth::GeneratedDriver d = kind == driver_synth::DriverKind::kFuzzing
                                          ? driver_synth::GenerateFuzzingDriver(spec)
                                      : kind == driver_synth::DriverKind::kFalsePositive
                                          ? driver_synth::GenerateFalsePositiveDriver(spec)
                                          : driver_synth::GenerateTestDriver(spec);
    std::string suffix = kind == driver_synth::DriverKind::kFuzzing        ? ".fuzz.c"
                         : kind == driver_synth::DriverKind::kFalsePositive ? ".fp.c"
                                                                            : ".test.c";
    fs::path path = dir / (args.function + suffix);
    WriteFileText(path, d.source);
    consumed = d.consumed_input_bytes;
    files.push_back({{"kind", driver_synth::DriverKindName(kind)}, {"path", path.string()}});
    if (!as_json) out << "wrote " << path.string() << "\n";
  }
  json slots = json::array();
  for (const auto& s : driver_synth::InputLayout(spec)) {
    slots.push_back({{"name", s.name},
                     {"offset", s.offset},
                     {"size", s.size},
                     {"count", s.count},
                     {"pointer", s.pointer}});
  }
  if (as_json) {
    out << json({{"consumed_input_bytes", consumed}, {"drivers", files}, {"slots", slots}}).dump(2)
        << "\n";
  } else {
    out << "consumed input bytes: " << consumed << "\n";
  }
  return kExitOk;
}

// seeds

int CmdSeeds(const DriverArgs& args, const std::string& out_dir,
             const std::vector<std::string>& timestamp_types, bool as_json, std::ostream& out) {
  driver_synth::DriverSpec spec = args.Spec();
  seedgen::SeedOptions options;
  options.timestamp_aliases.insert(timestamp_types.begin(), timestamp_types.end());
  auto seeds = seedgen::GenerateSeeds(spec, options);
  auto paths = seedgen::WriteSeeds(out_dir, seeds);
  json list = json::array();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    list.push_back({{"index", seeds[i].index},
                    {"path", paths[i].string()},
                    {"bytes", seeds[i].bytes.size()}});
    if (!as_json) out << paths[i].string() << " (" << seeds[i].bytes.size() << " bytes)\n";
  }
  if (as_json) out << list.dump(2) << "\n";
  return kExitOk;
}

// fuzz

struct FuzzArgs {
  std::string driver;
  std::string seeds;
  std::string fp_driver;
  double budget = 60;
  std::uint64_t max_execs = 0;
  std::uint64_t rng_seed = 0;
  std::uint64_t timeout_ms = 1000;
  std::uint64_t consumed = 0;
  bool keep_going = false;
  std::string kill_dir;
  std::string work_dir;
  std::size_t max_false_positives = 8;
};

int CmdFuzz(const FuzzArgs& a, bool as_json, std::ostream& out) {
  std::vector<Bytes> seeds;
  std::vector<fs::path> files;
  if (fs::is_directory(a.seeds)) {
    for (const auto& e : fs::directory_iterator(a.seeds)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(a.seeds);
  }
  std::size_t longest = 0;
  for (const auto& f : files) {
    seeds.push_back(ReadFileBytes(f));
    longest = std::max(longest, seeds.back().size());
  }
  fs::path work = a.work_dir.empty() ? fs::temp_directory_path() /
                                           ("motif-fuzz-" + std::to_string(::getpid()))
                                     : fs::path(a.work_dir);
  fuzzcore::ExecutorOptions eo;
  eo.timeout = std::chrono::milliseconds(a.timeout_ms);
  eo.rand_seed = a.rng_seed;
  fuzzcore::Executor ex(a.driver, work / "exec", eo);
  std::optional<fuzzcore::Executor> fp;
  if (!a.fp_driver.empty()) fp.emplace(a.fp_driver, work / "fp", eo);

  fuzzcore::FuzzOptions fo;
  fo.budget.time = std::chrono::duration<double>(a.budget);
  if (a.max_execs > 0) fo.budget.max_execs = a.max_execs;
  fo.rng_seed = a.rng_seed;
  fo.stop_at_first_kill = !a.keep_going;
  fo.consumed_bytes = a.consumed > 0 ? a.consumed : longest;
  fo.max_false_positives = a.max_false_positives;
  if (!a.kill_dir.empty()) fo.kill_dir = a.kill_dir;
  if (fp) {
    fo.kill_filter = [&](const Bytes& input) {
      return campaign::VerifyKill(input, *fp) == campaign::KillCheck::kGenuine;
    };
  }
  fuzzcore::FuzzOutcome o = fuzzcore::FuzzMutant(ex, seeds, fo);
  json kills = json::array();
  for (const auto& k : o.kills) {
    kills.push_back({{"index", k.index},
                     {"verdict", fuzzcore::VerdictName(k.verdict)},
                     {"time_s", k.time_s},
                     {"exec_index", k.exec_index},
                     {"origin", fuzzcore::OriginName(k.origin)},
                     {"genuine", k.genuine},
                     {"size", k.input.size()}});
  }
  if (as_json) {
    json counts = json::object();
    for (const auto& [v, n] : o.verdict_counts) counts[std::string(fuzzcore::VerdictName(v))] = n;
    out << json({{"killed", o.killed},
                 {"executions", o.executions},
                 {"queue_size", o.queue.size()},
                 {"false_positives", o.false_positives},
                 {"elapsed_s", o.elapsed_s},
                 {"verdicts", counts},
                 {"kills", kills}})
               .dump(2)
        << "\n";
  } else {
    out << (o.killed ? "killed" : "not killed") << " after " << o.executions
        << " executions, queue " << o.queue.size() << "\n";
    if (const auto* k = o.FirstGenuineKill()) {
      out << "first kill: " << fuzzcore::VerdictName(k->verdict) << " at execution "
          << k->exec_index << " (" << fuzzcore::OriginName(k->origin) << ")\n";
    }
    if (o.false_positives > 0) out << "false positives: " << o.false_positives << "\n";
  }
  if (a.work_dir.empty()) fs::remove_all(work);
  return kExitOk;
}

// campaign

int CmdCampaign(const std::string& config_path, bool dry_run, bool as_json, std::ostream& out,
                std::ostream& err) {
  campaign::CampaignConfig config = campaign::LoadConfig(config_path);
  if (dry_run) {
    campaign::CampaignPlan plan = campaign::PlanCampaign(config);
    out << (as_json ? campaign::PlanJson(plan) + "\n" : campaign::DescribePlan(plan));
    return kExitOk;
  }
  campaign::CampaignResult r = campaign::RunCampaign(config);
  campaign::Report report = campaign::BuildReport(r.records);
  if (as_json) {
    out << ReadFileText(r.summary_path);
  } else {
    out << campaign::FormatReport(report);
    out << "results: " << r.results_path.string() << "\n";
  }
  for (const auto& e : r.errors) err << "error: " << e << "\n";
  return r.errors.empty() ? kExitOk : kExitErrors;
}

// report

int CmdReport(const std::string& store, const std::vector<std::string>& compare,
              const std::string& csv, bool as_json, std::ostream& out) {
  if (!compare.empty()) {
    auto a = campaign::LoadStore(compare[0]);
    auto b = campaign::LoadStore(compare[1]);
    auto rows = campaign::CompareStores(a, b);
    out << (as_json ? campaign::ComparisonJson(rows) + "\n" : campaign::FormatComparison(rows));
    return kExitOk;
  }
  if (store.empty()) throw UsageError("report needs a results store or --compare A B");
  campaign::Report report = campaign::BuildReport(campaign::LoadStore(store));
  if (!csv.empty()) WriteFileText(csv, campaign::KillCurveCsv(report));
  out << (as_json ? campaign::ReportJson(report) + "\n" : campaign::FormatReport(report));
  return kExitOk;
}

// probe

int CmdProbe(const std::string& file, const std::string& compiler, const std::string& abi_name,
             bool as_json, std::ostream& out) {
  c_model::TypeEnvironment env = c_model::ParseDeclarations(ReadFileText(file));
  c_model::AbiProfile abi = AbiNamed(abi_name);
  std::vector<c_model::ProbeEntry> entries;
  std::map<std::string, c_model::Layout> computed;
  for (const auto& e : env.entries()) {
    if (e.kind != c_model::TypeEnvironment::EntryKind::kTypedef) continue;
    c_model::TypeRef t = env.FindTypedef(e.name);
    if (!env.IsResolvable(t)) continue;
    try {
      computed[e.name] = c_model::LayoutOf(t, env, abi);
    } catch (const Error&) {
      continue;
    }
    entries.push_back({e.name, t});
  }
  fs::path dir = fs::temp_directory_path() / ("motif-probe-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  WriteFileText(dir / "probe.c", c_model::EmitLayoutProbe(env, entries));
  ProcessOptions cc;
  cc.argv = SplitCommandLine(compiler);
  if (cc.argv.empty() || !FindInPath(cc.argv[0])) {
    fs::remove_all(dir);
    throw Error(ErrorCode::kCompilerUnavailable, "compiler not found: " + compiler);
  }
  for (const char* a : {"-w", "-o"}) cc.argv.push_back(a);
  cc.argv.push_back((dir / "probe").string());
  cc.argv.push_back((dir / "probe.c").string());
  cc.capture_output = true;
  ProcessResult built = RunProcess(cc);
  if (!built.Succeeded()) {
    fs::remove_all(dir);
    throw Error(ErrorCode::kCompilerUnavailable, "probe did not compile: " + built.output);
  }
  ProcessOptions run;
  run.argv = {(dir / "probe").string()};
  run.capture_output = true;
  run.timeout = std::chrono::seconds(10);
  ProcessResult ran = RunProcess(run);
  fs::remove_all(dir);
  auto mismatches = c_model::ReconcileLayouts(computed, ran.output);
  if (as_json) {
    json list = json::array();
    for (const auto& m : mismatches) list.push_back(m.ToString());
    out << json({{"types", entries.size()}, {"mismatches", list}}).dump(2) << "\n";
  } else {
    out << entries.size() << " type(s) probed, " << mismatches.size() << " mismatch(es)\n";
    for (const auto& m : mismatches) out << m.ToString() << "\n";
  }
  return mismatches.empty() ? kExitOk : kExitErrors;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutation testing of C functions through grey-box fuzzing", "motif"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file, function, abi = "lp64", out_dir;
  auto* parse = app.add_subcommand("parse", "Parse declarations and print types and layouts");
  parse->add_option("file", file, "C source file")->required();
  parse->add_option("--abi", abi, "lp64 or i386");

  std::vector<std::string> ops;
  bool tce = false;
  auto* mutate = app.add_subcommand("mutate", "Enumerate mutants of one function");
  mutate->add_option("file", file, "C source file")->required();
  mutate->add_option("-f,--function", function, "Function to mutate");
  mutate->add_option("--operators", ops, "Operators to apply")->delimiter(',');
  mutate->add_option("-o,--out", out_dir, "Write one source file per mutant");
  mutate->add_flag("--tce", tce, "Drop equivalent and duplicate mutants by compiling them");

  DriverArgs dargs;
  auto* drivers = app.add_subcommand("drivers", "Generate fuzzing, false-positive and test drivers");
  dargs.Register(drivers);
  drivers->add_option("-o,--out", out_dir, "Output directory");

  DriverArgs sargs;
  std::vector<std::string> timestamp_types;
  auto* seeds = app.add_subcommand("seeds", "Generate seed files for a function");
  sargs.Register(seeds);
  seeds->add_option("-o,--out", out_dir, "Output directory")->required();
  seeds->add_option("--timestamp-type", timestamp_types, "Typedef holding timestamps");

  FuzzArgs fargs;
  auto* fuzz = app.add_subcommand("fuzz", "Fuzz one compiled mutant driver");
  fuzz->add_option("--driver", fargs.driver, "Fuzzing driver executable")->required();
  fuzz->add_option("--seeds", fargs.seeds, "Seed file or directory")->required();
  fuzz->add_option("--fp-driver", fargs.fp_driver, "False-positive driver executable");
  fuzz->add_option("--budget", fargs.budget, "Seconds");
  fuzz->add_option("--max-execs", fargs.max_execs, "Execution cap");
  fuzz->add_option("--rng-seed", fargs.rng_seed, "Random seed");
  fuzz->add_option("--timeout-ms", fargs.timeout_ms, "Per-execution timeout");
  fuzz->add_option("--consumed", fargs.consumed, "Bytes read by the driver");
  fuzz->add_flag("--continue", fargs.keep_going, "Keep fuzzing after the first kill");
  fuzz->add_option("--kill-dir", fargs.kill_dir, "Where killing inputs are written");
  fuzz->add_option("--work-dir", fargs.work_dir, "Scratch directory");
  fuzz->add_option("--max-false-positives", fargs.max_false_positives, "Stop after this many");

  std::string config;
  bool dry_run = false;
  auto* camp = app.add_subcommand("campaign", "Run a mutation campaign from a config file");
  camp->add_option("--config", config, "JSON config file")->required();
  camp->add_flag("--dry-run", dry_run, "Print the plan and run nothing");

  std::string store, csv;
  std::vector<std::string> compare;
  auto* report = app.add_subcommand("report", "Summarize or compare results stores");
  report->add_option("store", store, "Results file or directory");
  report->add_option("--compare", compare, "Two stores to compare")->expected(2);
  report->add_option("--csv", csv, "Write the kill curve as CSV");

  std::string compiler = "cc";
  auto* probe = app.add_subcommand("probe", "Check computed layouts against the compiler");
  probe->add_option("file", file, "C source file")->required();
  probe->add_option("--cc", compiler, "Compiler command");
  probe->add_option("--abi", abi, "lp64 or i386");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "Machine-readable output");

  if (!args.empty() && args[0].rfind("-", 0) != 0) {
    bool known = false;
    for (auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args[0];
    if (!known) {
      err << "error: unknown subcommand '" << args[0] << "'\n" << app.help();
      return kExitUsage;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (parse->parsed()) return CmdParse(file, abi, as_json, out);
    if (mutate->parsed()) return CmdMutate(file, function, ops, out_dir, tce, as_json, out);
    if (drivers->parsed()) return CmdDrivers(dargs, out_dir, as_json, out);
    if (seeds->parsed()) return CmdSeeds(sargs, out_dir, timestamp_types, as_json, out);
    if (fuzz->parsed()) return CmdFuzz(fargs, as_json, out);
    if (camp->parsed()) return CmdCampaign(config, dry_run, as_json, out, err);
    if (report->parsed()) return CmdReport(store, compare, csv, as_json, out);
    if (probe->parsed()) return CmdProbe(file, compiler, abi, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    bool environment =
        e.code() == ErrorCode::kCompilerUnavailable || e.code() == ErrorCode::kSpawnFailure;
    return environment ? kExitEnvironment : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitErrors;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace motif::cli
