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

#ifndef MOTIF_C_MODEL_PROBE_H_
#define MOTIF_C_MODEL_PROBE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motif/c_model/layout.h"
#include "motif/c_model/types.h"

namespace motif::c_model {

struct ProbeEntry {
  std::string name;  // printed verbatim; must not contain whitespace
  TypeRef type;
};

// A short whitespace-free label for `type`: "int32", "float64",
// "struct_point", or the typedef name.
std::string DefaultProbeName(const TypeRef& type);

// A standalone C program that prints, for each entry, one line
//
//   <name> <sizeof> <alignof> [<offsetof member>...]
//
// with member offsets listed for structs only, in declaration order.
std::string EmitLayoutProbe(const TypeEnvironment& env,
                            const std::vector<ProbeEntry>& entries);

struct Mismatch {
  std::string type;
  std::optional<std::string> field;
  std::string property;  // "size", "alignment", "offset" or "field-count"
  std::uint64_t computed = 0;
  std::uint64_t observed = 0;

  std::string ToString() const;
};

// Compares computed layouts with probe output. Throws MalformedProbeOutput
// when a line does not follow the grammar, the text does not end with a
// newline, or a computed type has no record.
std::vector<Mismatch> ReconcileLayouts(
    const std::map<std::string, Layout>& computed,
    std::string_view probe_output);

}  // namespace motif::c_model

#endif  // MOTIF_C_MODEL_PROBE_H_
