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

#include "motif/seedgen/seedgen.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>

#include "motif/c_model/layout.h"
#include "motif/error.h"

namespace motif::seedgen {

using c_model::TypeKind;
using c_model::TypeRef;

namespace {

template <typename T>
Bytes LittleEndian(T value) {
  static_assert(std::endian::native == std::endian::little);
  Bytes out(sizeof(T));
  std::memcpy(out.data(), &value, sizeof(T));
  return out;
}

Bytes Timestamp(std::int64_t seconds, std::int32_t nanos) {
  Bytes out = LittleEndian(seconds);
  Bytes n = LittleEndian(nanos);
  out.insert(out.end(), n.begin(), n.end());
  return out;
}

// Repeats `pattern` across `size` bytes, truncating the last copy.
Bytes Tile(const Bytes& pattern, std::uint64_t size) {
  Bytes out(size);
  if (pattern.empty()) return out;
  for (std::uint64_t i = 0; i < size; ++i) out[i] = pattern[i % pattern.size()];
  return out;
}

bool IsTimestamp(TypeRef type, const c_model::TypeEnvironment& env,
                 const SeedOptions& options) {
  while (type) {
    if (type->kind == TypeKind::kAlias && options.timestamp_aliases.count(type->name)) return true;
    if (type->kind != TypeKind::kAlias) return false;
    type = type->target ? type->target : env.FindTypedef(type->name);
    if (type && type->kind == TypeKind::kAlias && !type->target) return false;
  }
  return false;
}

}  // namespace

SeedTable SeedTable::Default() {
  SeedTable t;
  t.int8 = {{0xFF}, {0x00}, {0x41}};
  t.int16 = {LittleEndian<std::int16_t>(-1), LittleEndian<std::int16_t>(0),
             LittleEndian<std::int16_t>(1)};
  t.int32 = {LittleEndian<std::int32_t>(-1), LittleEndian<std::int32_t>(0),
             LittleEndian<std::int32_t>(1)};
  t.int64 = {LittleEndian<std::int64_t>(-1), LittleEndian<std::int64_t>(0),
             LittleEndian<std::int64_t>(1)};
  t.boolean = {{0x00}, {0x01}};
  t.float32 = {LittleEndian<float>(-3230283776.0f), LittleEndian<float>(0.0f),
               LittleEndian<float>(1072693248.0f)};
  t.float64 = {LittleEndian<double>(13826050856027422720.0), LittleEndian<double>(0.0),
               LittleEndian<double>(4602891378046628864.0)};
  t.timestamp = {Timestamp(2145916800, 999999999), Timestamp(0, 0), Timestamp(2145916800, 0)};
  return t;
}

std::vector<Bytes> SeedPattern(const TypeRef& type, const c_model::TypeEnvironment& env,
                               const SeedOptions& options) {
  if (IsTimestamp(type, env, options)) {
    std::uint64_t size = c_model::LayoutOf(type, env, c_model::AbiProfile::Lp64()).size;
    std::vector<Bytes> out;
    for (Bytes b : options.table.timestamp) {
      b.resize(size, 0);
      out.push_back(std::move(b));
    }
    return out;
  }
  TypeRef r = env.Resolve(type);
  const SeedTable& t = options.table;
  switch (r->kind) {
    case TypeKind::kVoid:
      throw Error(ErrorCode::kUnsupportedType, "no seeds for void");
    case TypeKind::kPointer:
      throw Error(ErrorCode::kUnsupportedType, "no seeds for a pointer value");
    case TypeKind::kBool:
      return t.boolean;
    case TypeKind::kChar:
      return t.int8;
    case TypeKind::kSignedInt:
    case TypeKind::kUnsignedInt:
      switch (r->width) {
        case 8: return t.int8;
        case 16: return t.int16;
        case 32: return t.int32;
        default: return t.int64;
      }
    case TypeKind::kFloat32:
      return t.float32;
    case TypeKind::kFloat64:
      return t.float64;
    case TypeKind::kArray: {
      TypeRef element = env.Resolve(r->target);
      if (element->kind != TypeKind::kArray && !element->IsRecord() &&
          element->kind != TypeKind::kEnum) {
        return SeedPattern(r->target, env, options);
      }
      return t.int32;
    }
    default:
      return t.int32;
  }
}

std::vector<SeedFile> GenerateSeeds(const driver_synth::DriverSpec& spec,
                                    const SeedOptions& options) {
  std::vector<driver_synth::InputSlot> slots = driver_synth::InputLayout(spec);
  std::vector<std::vector<Bytes>> patterns;
  std::size_t files = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    TypeRef type = spec.signature.params[i].type;
    if (slots[i].pointer) {
      TypeRef pointee = spec.env.Resolve(type)->target;
      type = spec.env.Resolve(pointee)->kind == TypeKind::kVoid ? c_model::CType::UnsignedInt(8)
                                                                 : pointee;
    }
    patterns.push_back(SeedPattern(type, spec.env, options));
    if (patterns.back().empty()) {
      throw Error(ErrorCode::kUnsupportedType, "empty seed table entry for '" + slots[i].name + "'");
    }
    files = std::max(files, patterns.back().size());
  }
  files = std::min<std::size_t>(files, 3);
  std::vector<SeedFile> out;
  for (std::size_t k = 0; k < files; ++k) {
    SeedFile f;
    f.index = static_cast<int>(k + 1);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Bytes& p = patterns[i][std::min(k, patterns[i].size() - 1)];
      Bytes region = Tile(p, slots[i].size);
      f.bytes.insert(f.bytes.end(), region.begin(), region.end());
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string SeedFileName(int index) { return "seed_" + std::to_string(index); }

std::vector<std::filesystem::path> WriteSeeds(const std::filesystem::path& dir,
                                              const std::vector<SeedFile>& seeds) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const SeedFile& s : seeds) {
    paths.push_back(dir / SeedFileName(s.index));
    WriteFileBytes(paths.back(), s.bytes);
  }
  return paths;
}

}  // namespace motif::seedgen
