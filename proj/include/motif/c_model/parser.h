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

#ifndef MOTIF_C_MODEL_PARSER_H_
#define MOTIF_C_MODEL_PARSER_H_

#include <string_view>

#include "motif/c_model/types.h"

namespace motif::c_model {

struct ParseConfig {
  // Lines starting with '#' are skipped rather than rejected.
  bool skip_directives = true;
  // Width in bits of `long`; 64 for LP64 targets.
  int long_width = 64;
  // Recognize the fixed-width and size typedefs of <stdint.h>/<stddef.h>
  // without their headers.
  bool predefine_stdint = true;
};

// Parses the supported declaration subset of C: typedefs, struct, union
// and enum definitions, function prototypes and definitions (bodies are
// skipped, their byte spans recorded). Global variables are accepted and
// ignored.
//
// Errors inside one external declaration become a Diagnostic on the
// returned environment and parsing resumes at the next declaration. Only a
// lexical error (which leaves no way to resynchronize) throws.
TypeEnvironment ParseDeclarations(std::string_view source,
                                  const ParseConfig& config = {});

// Looks up a builtin alias such as `uint16_t`; null if unknown.
TypeRef BuiltinTypedef(std::string_view name, const ParseConfig& config = {});

}  // namespace motif::c_model

#endif  // MOTIF_C_MODEL_PARSER_H_
