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

#ifndef MOTIF_TESTS_SUPPORT_MUTANT_BUILDS_H_
#define MOTIF_TESTS_SUPPORT_MUTANT_BUILDS_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "motif/c_model/parser.h"
#include "motif/driver_synth/driver_synth.h"
#include "motif/error.h"
#include "motif/mutagen/mutagen.h"
#include "motif/seedgen/seedgen.h"
#include "motif/util/files.h"
#include "test_support.h"

namespace motif::testing {

struct MutantBuild {
  mutagen::Mutant mutant;
  driver_synth::DriverSpec spec;
  std::filesystem::path fuzz_exe;
  std::vector<Bytes> seeds;
  std::size_t consumed_bytes = 0;
};

inline std::vector<mutagen::Mutant> AllMutants(const mutagen::SourceFile& source,
                                               const std::string& function) {
  auto ops = mutagen::AllOperators();
  return mutagen::GenerateMutants(source, mutagen::EnumerateSites(source, function, ops), ops);
}

inline driver_synth::DriverSpec SpecFor(const std::string& text, const std::string& function) {
  driver_synth::DriverSpec spec;
  spec.env = c_model::ParseDeclarations(text);
  const c_model::FunctionSignature* sig = spec.env.FindSignature(function);
  if (sig == nullptr) throw Error(ErrorCode::kParseFailure, "no function " + function);
  spec.signature = *sig;
  return spec;
}

inline std::vector<Bytes> SeedBytes(const driver_synth::DriverSpec& spec) {
  std::vector<Bytes> out;
  for (auto& s : seedgen::GenerateSeeds(spec)) out.push_back(std::move(s.bytes));
  return out;
}

// Builds the fuzzing driver for `mutant` of `function` in `source`.
inline std::optional<MutantBuild> BuildMutant(const ScratchDir& dir,
                                              const mutagen::SourceFile& source,
                                              const std::string& function,
                                              const mutagen::Mutant& mutant) {
  MutantBuild b;
  b.mutant = mutant;
  b.spec = SpecFor(source.text, function);
  driver_synth::GeneratedDriver d = driver_synth::GenerateFuzzingDriver(b.spec);
  b.consumed_bytes = d.consumed_input_bytes;
  b.seeds = SeedBytes(b.spec);
  auto exe = BuildDriver(dir, function + "_m" + std::to_string(mutant.id), d.source,
                         mutagen::MutantUnit(source, mutant));
  if (!exe) return std::nullopt;
  b.fuzz_exe = *exe;
  return b;
}

inline const mutagen::Mutant* FindMutant(const std::vector<mutagen::Mutant>& mutants,
                                         const std::string& original,
                                         const std::string& replacement,
                                         int occurrence = 0) {
  for (const auto& m : mutants) {
    if (m.original == original && m.replacement == replacement && occurrence-- == 0) return &m;
  }
  return nullptr;
}

}  // namespace motif::testing

#endif  // MOTIF_TESTS_SUPPORT_MUTANT_BUILDS_H_
