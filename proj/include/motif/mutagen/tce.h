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

#ifndef MOTIF_MUTAGEN_TCE_H_
#define MOTIF_MUTAGEN_TCE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motif/mutagen/mutagen.h"

namespace motif::mutagen {

struct TceOptions {
  // Placeholders: {src}, {out}, {optlevel}. Split on whitespace before
  // substitution; an argument that expands to nothing is dropped.
  std::string compile_template = "cc -std=gnu17 -w -c {optlevel} -o {out} {src}";
  std::vector<std::string> optimization_levels = {"-O2"};
  std::vector<std::string> extra_args;
  std::filesystem::path work_dir;
  int jobs = 1;
};

struct TceResult {
  std::vector<int> kept;
  std::vector<int> equivalent;
  std::vector<int> duplicate;
  std::vector<int> stillborn;
};

// Compiles the original and every mutant (with the function left under its
// original name) at each optimization level and compares code digests.
// Updates each mutant's status, duplicate_of and diagnostic. Throws
// CompilerUnavailable when the compiler cannot be run or rejects the
// original.
TceResult TceFilter(const SourceFile& original, std::vector<Mutant>& mutants,
                    const TceOptions& options);

// Expands the compile template into an argv.
std::vector<std::string> ExpandCompileTemplate(const std::string& tmpl,
                                               const std::string& src,
                                               const std::string& out,
                                               const std::string& optlevel);

// Digest of the loadable content of an object file: allocated section
// bytes, relocations with their symbol names, and defined global symbols.
// Debug info, comments and notes that are not loaded are ignored. Files
// that are not 64-bit ELF are hashed whole.
std::uint64_t ObjectDigest(std::span<const std::uint8_t> object);

}  // namespace motif::mutagen

#endif  // MOTIF_MUTAGEN_TCE_H_
