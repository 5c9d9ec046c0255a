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

#include "motif/c_model/layout.h"

#include <algorithm>
#include <string>

namespace motif::c_model {

AbiProfile AbiProfile::Lp64() {
  AbiProfile abi;
  abi.name = "lp64";
  return abi;
}

AbiProfile AbiProfile::I386() {
  AbiProfile abi;
  abi.name = "i386";
  abi.pointer_size = 4;
  abi.pointer_align = 4;
  abi.int64_align = 4;
  abi.float64_align = 4;
  return abi;
}

namespace {

std::uint64_t RoundUp(std::uint64_t value, std::uint64_t align) {
  return (value + align - 1) / align * align;
}

std::uint64_t IntegerAlign(int width, const AbiProfile& abi) {
  switch (width) {
    case 8: return 1;
    case 16: return abi.int16_align;
    case 32: return abi.int32_align;
    default: return abi.int64_align;
  }
}

}  // namespace

Layout LayoutOf(const TypeRef& type, const TypeEnvironment& env,
                const AbiProfile& abi) {
  TypeRef t = env.Resolve(type);
  Layout layout;
  switch (t->kind) {
    case TypeKind::kVoid:
      throw Error(ErrorCode::kUnsupportedType, "void has no layout");
    case TypeKind::kBool:
      layout.size = layout.alignment = abi.bool_size;
      return layout;
    case TypeKind::kChar:
      layout.size = layout.alignment = 1;
      return layout;
    case TypeKind::kSignedInt:
    case TypeKind::kUnsignedInt:
      layout.size = static_cast<std::uint64_t>(t->width) / 8;
      layout.alignment = IntegerAlign(t->width, abi);
      return layout;
    case TypeKind::kFloat32:
      layout.size = 4;
      layout.alignment = abi.float32_align;
      return layout;
    case TypeKind::kFloat64:
      layout.size = 8;
      layout.alignment = abi.float64_align;
      return layout;
    case TypeKind::kEnum:
      layout.size = layout.alignment = abi.enum_size;
      return layout;
    case TypeKind::kPointer:
      layout.size = abi.pointer_size;
      layout.alignment = abi.pointer_align;
      return layout;
    case TypeKind::kArray: {
      Layout element = LayoutOf(t->target, env, abi);
      layout.size = element.size * t->length;
      layout.alignment = element.alignment;
      return layout;
    }
    case TypeKind::kStruct: {
      std::uint64_t offset = 0;
      for (const Field& f : t->fields) {
        Layout member = LayoutOf(f.type, env, abi);
        offset = RoundUp(offset, member.alignment);
        layout.field_offsets.emplace_back(f.name, offset);
        offset += member.size;
        layout.alignment = std::max(layout.alignment, member.alignment);
      }
      layout.size = RoundUp(offset, layout.alignment);
      return layout;
    }
    case TypeKind::kUnion: {
      std::uint64_t size = 0;
      for (const Field& f : t->fields) {
        Layout member = LayoutOf(f.type, env, abi);
        size = std::max(size, member.size);
        layout.alignment = std::max(layout.alignment, member.alignment);
      }
      layout.size = RoundUp(size, layout.alignment);
      return layout;
    }
    case TypeKind::kAlias:
      break;
  }
  throw Error(ErrorCode::kUnresolvableType, "unresolved alias");
}

}  // namespace motif::c_model
