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

#include "motif/campaign/record.h"

#include <fcntl.h>
#include <unistd.h>

#include <sstream>

#include "json.hpp"
#include "motif/error.h"
#include "motif/util/files.h"

namespace motif::campaign {

using nlohmann::json;

std::string_view MutantVerdictName(MutantVerdict verdict) {
  switch (verdict) {
    case MutantVerdict::kKilledGenuine: return "killed-genuine";
    case MutantVerdict::kLive: return "live";
    case MutantVerdict::kLiveFpOnly: return "live-fp-only";
    case MutantVerdict::kTceDropped: return "tce-dropped";
    case MutantVerdict::kStillborn: return "stillborn";
  }
  return "?";
}

std::optional<MutantVerdict> ParseMutantVerdict(std::string_view name) {
  for (MutantVerdict v : {MutantVerdict::kKilledGenuine, MutantVerdict::kLive,
                          MutantVerdict::kLiveFpOnly, MutantVerdict::kTceDropped,
                          MutantVerdict::kStillborn}) {
    if (MutantVerdictName(v) == name) return v;
  }
  return std::nullopt;
}

std::string RecordLine(const CampaignRecord& r) {
  json j = {
      {"run_id", r.run_id},
      {"mutant_id", r.mutant_id},
      {"function", r.function},
      {"source", r.source},
      {"operator", r.op},
      {"line", r.line},
      {"original", r.original},
      {"replacement", r.replacement},
      {"verdict", MutantVerdictName(r.verdict)},
      {"reason", r.reason},
      {"duplicate_of", r.duplicate_of ? json(*r.duplicate_of) : json(nullptr)},
      {"first_kill_s", r.first_kill_s ? json(*r.first_kill_s) : json(nullptr)},
      {"first_kill_exec", r.first_kill_exec ? json(*r.first_kill_exec) : json(nullptr)},
      {"kill_origin", r.kill_origin ? json(fuzzcore::OriginName(*r.kill_origin)) : json(nullptr)},
      {"kill_verdict", r.kill_verdict ? json(*r.kill_verdict) : json(nullptr)},
      {"executions", r.executions},
      {"false_positives", r.false_positives},
      {"queue_size", r.queue_size},
      {"killing_inputs", r.killing_inputs},
      {"elapsed_s", r.elapsed_s},
  };
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

CampaignRecord ParseRecordLine(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kIo, std::string("malformed record: ") + e.what());
  }
  CampaignRecord r;
  try {
    r.run_id = j.value("run_id", "");
    r.mutant_id = j.at("mutant_id").get<int>();
    r.function = j.value("function", "");
    r.source = j.value("source", "");
    r.op = j.value("operator", "");
    r.line = j.value("line", 0);
    r.original = j.value("original", "");
    r.replacement = j.value("replacement", "");
    auto v = ParseMutantVerdict(j.at("verdict").get<std::string>());
    if (!v) throw Error(ErrorCode::kIo, "unknown verdict in record");
    r.verdict = *v;
    r.reason = j.value("reason", "");
    auto opt = [&](const char* key) { return j.contains(key) && !j[key].is_null(); };
    if (opt("duplicate_of")) r.duplicate_of = j["duplicate_of"].get<int>();
    if (opt("first_kill_s")) r.first_kill_s = j["first_kill_s"].get<double>();
    if (opt("first_kill_exec")) r.first_kill_exec = j["first_kill_exec"].get<std::uint64_t>();
    if (opt("kill_origin")) {
      r.kill_origin = j["kill_origin"].get<std::string>() == "seed" ? fuzzcore::Origin::kSeed
                                                                    : fuzzcore::Origin::kFuzzed;
    }
    if (opt("kill_verdict")) r.kill_verdict = j["kill_verdict"].get<std::string>();
    r.executions = j.value("executions", std::uint64_t{0});
    r.false_positives = j.value("false_positives", std::uint64_t{0});
    r.queue_size = j.value("queue_size", std::uint64_t{0});
    if (opt("killing_inputs")) r.killing_inputs = j["killing_inputs"].get<std::vector<std::string>>();
    r.elapsed_s = j.value("elapsed_s", 0.0);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("malformed record: ") + e.what());
  }
  return r;
}

void AppendRecord(const std::filesystem::path& path, const CampaignRecord& record) {
  std::string line = RecordLine(record) + "\n";
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  ssize_t n = ::write(fd, line.data(), line.size());
  ::close(fd);
  if (n != static_cast<ssize_t>(line.size())) {
    throw Error(ErrorCode::kIo, "short write to " + path.string());
  }
}

std::vector<CampaignRecord> LoadStore(const std::filesystem::path& path) {
  std::filesystem::path file = path;
  if (std::filesystem::is_directory(path)) file = path / kResultsFile;
  std::string text = ReadFileText(file);
  std::vector<CampaignRecord> records;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) break;
    std::string_view line(text.data() + start, nl - start);
    start = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    records.push_back(ParseRecordLine(line));
  }
  return records;
}

}  // namespace motif::campaign
