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

#ifndef MOTIF_C_MODEL_LAYOUT_H_
#define MOTIF_C_MODEL_LAYOUT_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "motif/c_model/types.h"

namespace motif::c_model {

// Per-primitive sizes and alignments of a target. Struct members are
// placed at the next multiple of their alignment and records are padded
// to a multiple of their largest member alignment.
struct AbiProfile {
  std::string name;
  std::uint64_t pointer_size = 8;
  std::uint64_t pointer_align = 8;
  std::uint64_t int16_align = 2;
  std::uint64_t int32_align = 4;
  std::uint64_t int64_align = 8;
  std::uint64_t float32_align = 4;
  std::uint64_t float64_align = 8;
  std::uint64_t bool_size = 1;
  std::uint64_t enum_size = 4;

  // 64-bit little-endian, natural alignment (x86-64 / AArch64 SysV).
  static AbiProfile Lp64();
  // 32-bit i386 SysV: 8-byte scalars aligned to 4.
  static AbiProfile I386();
};

struct Layout {
  std::uint64_t size = 0;
  std::uint64_t alignment = 1;
  // Struct members in declaration order; empty for everything else.
  std::vector<std::pair<std::string, std::uint64_t>> field_offsets;

  friend bool operator==(const Layout&, const Layout&) = default;
};

// Throws UnresolvableType when `type` (or anything it contains by value)
// cannot be resolved in `env`, UnsupportedType for void.
Layout LayoutOf(const TypeRef& type, const TypeEnvironment& env,
                const AbiProfile& abi);

}  // namespace motif::c_model

#endif  // MOTIF_C_MODEL_LAYOUT_H_
