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

#ifndef MOTIF_C_MODEL_RENDER_H_
#define MOTIF_C_MODEL_RENDER_H_

#include <string>
#include <vector>

#include "motif/c_model/types.h"

namespace motif::c_model {

// Spells `type` as a C declaration of `name` (abstract when `name` is
// empty), e.g. ("int (*)[3]", "") or ("const char *s", "s").
std::string RenderDeclaration(const TypeRef& type, const std::string& name);

// Spells a parameter, keeping array syntax if it was declared that way.
std::string RenderParam(const Param& param);

// "int f(int a, char *b)" without the trailing semicolon. `name_override`
// replaces the function name when non-empty.
std::string RenderPrototype(const FunctionSignature& signature,
                            const std::string& name_override = "");

// The tag and typedef declarations reachable from `roots`, in the order
// they were declared. Builtin <stdint.h> names are never emitted.
std::string RenderTypeDeclarations(const TypeEnvironment& env,
                                   const std::vector<TypeRef>& roots);

// All tags, typedefs and prototypes of `env`. Parsing the result yields an
// environment equal to `env`.
std::string RenderEnvironment(const TypeEnvironment& env);

}  // namespace motif::c_model

#endif  // MOTIF_C_MODEL_RENDER_H_
