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

#ifndef MOTIF_SEEDGEN_SEEDGEN_H_
#define MOTIF_SEEDGEN_SEEDGEN_H_

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "motif/c_model/types.h"
#include "motif/driver_synth/driver_synth.h"
#include "motif/util/files.h"

namespace motif::seedgen {

// Seed byte patterns per primitive kind, in file order. Multi-byte
// patterns are little-endian.
struct SeedTable {
  std::vector<Bytes> int8;  // char, signed char, unsigned char
  std::vector<Bytes> int16;
  std::vector<Bytes> int32;
  std::vector<Bytes> int64;
  std::vector<Bytes> boolean;
  std::vector<Bytes> float32;
  std::vector<Bytes> float64;
  std::vector<Bytes> timestamp;  // int64 seconds, int32 nanoseconds

  static SeedTable Default();
};

struct SeedOptions {
  SeedTable table = SeedTable::Default();
  // Alias names whose values are timestamps.
  std::set<std::string> timestamp_aliases;
};

// Patterns for one value of `type`. Aggregates and enums get the 4-byte
// int patterns and arrays of primitives their element's patterns; callers
// tile these across the value. Throws UnsupportedType for void and
// pointers.
std::vector<Bytes> SeedPattern(const c_model::TypeRef& type,
                               const c_model::TypeEnvironment& env,
                               const SeedOptions& options = {});

struct SeedFile {
  int index = 1;  // 1-based
  Bytes bytes;
};

// At most three files, each exactly the driver's consumed input length.
// File k uses the k-th pattern of every parameter, or its last pattern
// when the parameter has fewer. A signature without parameters yields one
// empty file.
std::vector<SeedFile> GenerateSeeds(const driver_synth::DriverSpec& spec,
                                    const SeedOptions& options = {});

std::string SeedFileName(int index);  // "seed_<index>"

// Writes every file into `dir` and returns the paths.
std::vector<std::filesystem::path> WriteSeeds(const std::filesystem::path& dir,
                                              const std::vector<SeedFile>& seeds);

}  // namespace motif::seedgen

#endif  // MOTIF_SEEDGEN_SEEDGEN_H_
