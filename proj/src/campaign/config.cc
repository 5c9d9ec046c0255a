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

#include "motif/campaign/config.h"

#include <charconv>
#include <sstream>

#include "json.hpp"
#include "motif/error.h"
#include "motif/util/files.h"

namespace motif::campaign {
namespace {

using nlohmann::json;

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidConfig, message);
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    Invalid(std::string("bad value for '") + key + "'");
  }
}

void CheckKeys(const json& j, std::initializer_list<std::string_view> allowed,
               const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == key;
    if (!ok) Invalid("unknown key '" + key + "' in " + where);
  }
}

std::map<std::string, std::uint64_t> LengthMap(const json& j, const char* key) {
  std::map<std::string, std::uint64_t> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_object()) Invalid(std::string("'") + key + "' must be an object");
  for (const auto& [name, value] : j.at(key).items()) {
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0) {
      Invalid("pointer length for '" + name + "' must be a positive integer");
    }
    out[name] = value.get<std::uint64_t>();
  }
  return out;
}

}  // namespace

std::filesystem::path DefaultRuntimeDir() { return MOTIF_DEFAULT_RUNTIME_DIR; }

CampaignConfig ParseConfig(std::string_view json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    Invalid(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) Invalid("config must be a JSON object");
  CheckKeys(j,
            {"run_id", "targets", "operators", "budget_seconds", "max_execs", "exec_timeout_ms",
             "workers", "rng_seed", "build_template", "runtime_dir", "output_dir", "abi",
             "array_default_length", "pointer_lengths", "timestamp_types", "setup_snippet",
             "checkpoint_channel", "tce", "denylist", "cross_replay", "stop_at_first_kill",
             "max_false_positives"},
            "config");

  CampaignConfig c;
  if (j.contains("run_id")) c.run_id = Get<std::string>(j, "run_id");
  if (!j.contains("targets") || !j["targets"].is_array()) Invalid("'targets' must be an array");
  for (const json& t : j["targets"]) {
    if (!t.is_object()) Invalid("each target must be an object");
    CheckKeys(t, {"source", "function", "pointer_lengths", "excluded", "setup_snippet"},
              "target");
    Target target;
    target.source = Resolve(base_dir, Get<std::string>(t, "source"));
    target.function = Get<std::string>(t, "function");
    target.pointer_lengths = LengthMap(t, "pointer_lengths");
    if (t.contains("excluded")) target.excluded = Get<std::set<std::string>>(t, "excluded");
    if (t.contains("setup_snippet")) {
      target.setup_snippet = Resolve(base_dir, Get<std::string>(t, "setup_snippet"));
    }
    c.targets.push_back(std::move(target));
  }
  if (j.contains("operators")) {
    c.operators.clear();
    for (const auto& name : Get<std::vector<std::string>>(j, "operators")) {
      auto op = mutagen::ParseOperator(name);
      if (!op) Invalid("unknown operator '" + name + "'");
      c.operators.insert(*op);
    }
  }
  if (j.contains("budget_seconds")) c.budget_seconds = Get<double>(j, "budget_seconds");
  if (j.contains("max_execs") && !j["max_execs"].is_null()) {
    c.max_execs = Get<std::uint64_t>(j, "max_execs");
  }
  if (j.contains("exec_timeout_ms")) c.exec_timeout_ms = Get<std::uint64_t>(j, "exec_timeout_ms");
  if (j.contains("workers")) c.workers = Get<int>(j, "workers");
  if (j.contains("rng_seed")) c.rng_seed = Get<std::uint64_t>(j, "rng_seed");
  if (j.contains("build_template")) c.build_template = Get<std::string>(j, "build_template");
  c.runtime_dir = j.contains("runtime_dir")
                      ? Resolve(base_dir, Get<std::string>(j, "runtime_dir"))
                      : DefaultRuntimeDir();
  if (j.contains("output_dir")) c.output_dir = Get<std::string>(j, "output_dir");
  c.output_dir = Resolve(base_dir, c.output_dir.string());
  if (j.contains("abi")) {
    std::string abi = Get<std::string>(j, "abi");
    if (abi == "lp64") {
      c.abi = c_model::AbiProfile::Lp64();
    } else if (abi == "i386") {
      c.abi = c_model::AbiProfile::I386();
    } else {
      Invalid("unknown abi '" + abi + "'");
    }
  }
  if (j.contains("array_default_length")) {
    c.array_default_length = Get<std::uint64_t>(j, "array_default_length");
  }
  c.pointer_lengths = LengthMap(j, "pointer_lengths");
  if (j.contains("timestamp_types")) {
    c.timestamp_types = Get<std::set<std::string>>(j, "timestamp_types");
  }
  if (j.contains("setup_snippet")) {
    c.setup_snippet = Resolve(base_dir, Get<std::string>(j, "setup_snippet"));
  }
  if (j.contains("checkpoint_channel")) {
    std::string ch = Get<std::string>(j, "checkpoint_channel");
    if (ch == "file") {
      c.checkpoint_channel = driver_synth::CheckpointChannel::kFile;
    } else if (ch == "stderr") {
      c.checkpoint_channel = driver_synth::CheckpointChannel::kStderr;
    } else {
      Invalid("unknown checkpoint_channel '" + ch + "'");
    }
  }
  if (j.contains("tce")) {
    const json& t = j["tce"];
    if (!t.is_object()) Invalid("'tce' must be an object");
    CheckKeys(t, {"enabled", "template", "levels"}, "tce");
    if (t.contains("enabled")) c.tce = Get<bool>(t, "enabled");
    if (t.contains("template")) c.tce_template = Get<std::string>(t, "template");
    if (t.contains("levels")) c.tce_levels = Get<std::vector<std::string>>(t, "levels");
  }
  if (j.contains("denylist")) c.denylist = Resolve(base_dir, Get<std::string>(j, "denylist"));
  if (j.contains("cross_replay")) c.cross_replay = Get<bool>(j, "cross_replay");
  if (j.contains("stop_at_first_kill")) c.stop_at_first_kill = Get<bool>(j, "stop_at_first_kill");
  if (j.contains("max_false_positives")) {
    c.max_false_positives = Get<std::size_t>(j, "max_false_positives");
  }
  ValidateConfig(c);
  return c;
}

CampaignConfig LoadConfig(const std::filesystem::path& path) {
  std::string text;
  try {
    text = ReadFileText(path);
  } catch (const Error& e) {
    Invalid("cannot read config " + path.string());
  }
  return ParseConfig(text, std::filesystem::absolute(path).parent_path());
}

void ValidateConfig(const CampaignConfig& c) {
  if (!(c.budget_seconds > 0)) Invalid("budget_seconds must be > 0");
  if (c.max_execs && *c.max_execs == 0) Invalid("max_execs must be > 0");
  if (c.workers < 1) Invalid("workers must be >= 1");
  if (c.exec_timeout_ms == 0) Invalid("exec_timeout_ms must be > 0");
  if (c.targets.empty()) Invalid("at least one target is required");
  if (c.max_false_positives == 0) Invalid("max_false_positives must be >= 1");
  if (c.tce && c.tce_levels.empty()) Invalid("tce.levels must not be empty");
  for (const auto& t : c.targets) {
    if (t.function.empty()) Invalid("target function must not be empty");
  }
}

std::set<int> LoadDenylist(const std::filesystem::path& path) {
  std::set<int> ids;
  std::istringstream in(ReadFileText(path));
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = line.substr(0, line.find('#'));
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string_view word(line.data() + b, e - b + 1);
    int id = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), id);
    if (ec != std::errc() || ptr != word.data() + word.size() || id < 1) {
      Invalid(path.string() + ":" + std::to_string(n) + ": expected a mutant id");
    }
    ids.insert(id);
  }
  return ids;
}

}  // namespace motif::campaign
