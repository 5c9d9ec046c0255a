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

#ifndef MOTIF_MUTAGEN_MUTAGEN_H_
#define MOTIF_MUTAGEN_MUTAGEN_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "motif/c_model/types.h"

namespace motif::mutagen {

enum class Operator {
  kAor,  // binary arithmetic replacement
  kRor,  // relational replacement
  kLcr,  // logical connector replacement
  kBwr,  // bitwise replacement
  kUoi,  // unary operator insertion
  kIcr,  // integer constant replacement
  kSdl,  // statement deletion
};

using OperatorSet = std::set<Operator>;

std::string_view OperatorName(Operator op);
std::optional<Operator> ParseOperator(std::string_view name);
OperatorSet AllOperators();

enum class SiteKind {
  kBinaryArith,
  kRelational,
  kLogical,
  kBitwise,
  kUnaryInsert,
  kConstant,
  kStatement,
};

std::string_view SiteKindName(SiteKind kind);
Operator OperatorForSite(SiteKind kind);

struct MutationSite {
  std::string file;
  std::string function;
  std::size_t begin = 0;  // byte span in the source file
  std::size_t end = 0;
  SiteKind kind = SiteKind::kStatement;
  std::string text;       // source[begin, end)
  bool floating = false;  // UOI operand has floating type

  friend bool operator==(const MutationSite&, const MutationSite&) = default;
};

enum class MutantStatus {
  kPending,
  kKilled,
  kLive,
  kTceEquivalent,
  kTceDuplicate,
  kStillborn,
};

std::string_view MutantStatusName(MutantStatus status);

struct SourceFile {
  std::string path;
  std::string text;
};

struct Mutant {
  int id = 0;
  MutationSite site;
  Operator op = Operator::kAor;
  std::string original;
  std::string replacement;
  // The whole file with the site edited and the function renamed.
  std::string mutated_source;
  MutantStatus status = MutantStatus::kPending;
  std::optional<int> duplicate_of;
  std::string diagnostic;

  // Offsets into mutated_source.
  std::size_t name_offset = 0;
  std::size_t definition_begin = 0;
  std::size_t definition_end = 0;
};

inline constexpr std::string_view kMutantPrefix = "mut_";

// Sites inside the body of `function` for every enabled operator, ordered
// by byte offset. When `function` is empty the source must contain exactly
// one function definition. Throws ParseFailure otherwise.
std::vector<MutationSite> EnumerateSites(const SourceFile& source,
                                         std::string_view function,
                                         const OperatorSet& operators);

// Replacement spellings for one site, in a fixed order.
std::vector<std::string> Alternatives(const MutationSite& site);

// One mutant per alternative of each site whose operator is enabled.
// Ids are assigned consecutively from `first_id`.
std::vector<Mutant> GenerateMutants(const SourceFile& source,
                                    const std::vector<MutationSite>& sites,
                                    const OperatorSet& operators,
                                    int first_id = 1);

// Builds a mutant from an arbitrary edit of `site`'s span.
Mutant MakeMutant(const SourceFile& source,
                  const c_model::FunctionDefinition& definition,
                  const MutationSite& site, Operator op,
                  std::string replacement, int id);

// The source with the site edit applied but the function not renamed.
std::string EditedSource(const Mutant& mutant);

// The renamed mutated function definition alone.
std::string MutatedFunction(const Mutant& mutant);

// Translation unit holding both the original and the mutated function.
std::string MutantUnit(const SourceFile& source, const Mutant& mutant);

// "<function>.mut<id>.<operator>.c"
std::string MutantFileName(const Mutant& mutant);

const c_model::FunctionDefinition& FindDefinition(
    const c_model::TypeEnvironment& env, const SourceFile& source,
    std::string_view function);

}  // namespace motif::mutagen

#endif  // MOTIF_MUTAGEN_MUTAGEN_H_
