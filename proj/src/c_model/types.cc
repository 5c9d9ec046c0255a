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

#include "motif/c_model/types.h"

#include <algorithm>
#include <memory>
#include <string>
#include <utility>

namespace motif::c_model {

std::string_view TypeKindName(TypeKind kind) {
  switch (kind) {
    case TypeKind::kVoid: return "void";
    case TypeKind::kBool: return "bool";
    case TypeKind::kChar: return "char";
    case TypeKind::kSignedInt: return "signed-int";
    case TypeKind::kUnsignedInt: return "unsigned-int";
    case TypeKind::kFloat32: return "float32";
    case TypeKind::kFloat64: return "float64";
    case TypeKind::kEnum: return "enum";
    case TypeKind::kStruct: return "struct";
    case TypeKind::kUnion: return "union";
    case TypeKind::kPointer: return "pointer";
    case TypeKind::kArray: return "array";
    case TypeKind::kAlias: return "alias";
  }
  return "?";
}

namespace {

TypeRef Make(CType type) { return std::make_shared<const CType>(std::move(type)); }

}  // namespace

TypeRef CType::Void() { return Make({.kind = TypeKind::kVoid}); }
TypeRef CType::Bool() { return Make({.kind = TypeKind::kBool, .width = 8}); }
TypeRef CType::Char() { return Make({.kind = TypeKind::kChar, .width = 8}); }
TypeRef CType::SignedInt(int width) {
  return Make({.kind = TypeKind::kSignedInt, .width = width});
}
TypeRef CType::UnsignedInt(int width) {
  return Make({.kind = TypeKind::kUnsignedInt, .width = width});
}
TypeRef CType::Float32() { return Make({.kind = TypeKind::kFloat32, .width = 32}); }
TypeRef CType::Float64() { return Make({.kind = TypeKind::kFloat64, .width = 64}); }

TypeRef CType::Pointer(TypeRef pointee) {
  return Make({.kind = TypeKind::kPointer, .target = std::move(pointee)});
}

TypeRef CType::Array(TypeRef element, std::uint64_t length) {
  return Make({.kind = TypeKind::kArray,
               .target = std::move(element),
               .length = length});
}

TypeRef CType::Alias(std::string name, TypeRef target) {
  return Make({.kind = TypeKind::kAlias,
               .name = std::move(name),
               .target = std::move(target)});
}

TypeRef CType::Struct(std::string tag, std::vector<Field> fields) {
  return Make({.kind = TypeKind::kStruct,
               .name = std::move(tag),
               .fields = std::move(fields)});
}

TypeRef CType::Union(std::string tag, std::vector<Field> fields) {
  return Make({.kind = TypeKind::kUnion,
               .name = std::move(tag),
               .fields = std::move(fields)});
}

TypeRef CType::Enum(std::string tag, std::vector<Enumerator> enumerators) {
  return Make({.kind = TypeKind::kEnum,
               .width = 32,
               .name = std::move(tag),
               .enumerators = std::move(enumerators)});
}

TypeRef CType::TagReference(TypeKind kind, std::string tag) {
  return Make({.kind = kind,
               .width = kind == TypeKind::kEnum ? 32 : 0,
               .name = std::move(tag),
               .complete = false});
}

bool CType::IsArithmetic() const {
  switch (kind) {
    case TypeKind::kBool:
    case TypeKind::kChar:
    case TypeKind::kSignedInt:
    case TypeKind::kUnsignedInt:
    case TypeKind::kFloat32:
    case TypeKind::kFloat64:
    case TypeKind::kEnum:
      return true;
    default:
      return false;
  }
}

bool operator==(const CType& a, const CType& b) {
  if (a.kind != b.kind || a.width != b.width || a.name != b.name ||
      a.length != b.length || a.is_const != b.is_const ||
      a.complete != b.complete || a.builtin_alias != b.builtin_alias) {
    return false;
  }
  if (a.fields.size() != b.fields.size() ||
      a.enumerators.size() != b.enumerators.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.fields.size(); ++i) {
    if (a.fields[i].name != b.fields[i].name ||
        !SameType(a.fields[i].type, b.fields[i].type)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.enumerators.size(); ++i) {
    if (a.enumerators[i].name != b.enumerators[i].name ||
        a.enumerators[i].value != b.enumerators[i].value) {
      return false;
    }
  }
  return SameType(a.target, b.target);
}

bool SameType(const TypeRef& a, const TypeRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

TypeRef WithoutConst(const TypeRef& type) {
  if (!type || !type->is_const) return type;
  CType copy = *type;
  copy.is_const = false;
  return Make(std::move(copy));
}

TypeRef WithConst(const TypeRef& type) {
  if (!type || type->is_const) return type;
  CType copy = *type;
  copy.is_const = true;
  return Make(std::move(copy));
}

std::string_view ParamRoleName(ParamRole role) {
  switch (role) {
    case ParamRole::kAuto: return "auto";
    case ParamRole::kInput: return "input";
    case ParamRole::kOutput: return "output";
    case ParamRole::kInOut: return "in-out";
  }
  return "auto";
}

std::optional<ParamRole> ParseParamRole(std::string_view text) {
  if (text == "auto") return ParamRole::kAuto;
  if (text == "input") return ParamRole::kInput;
  if (text == "output") return ParamRole::kOutput;
  if (text == "in-out" || text == "inout") return ParamRole::kInOut;
  return std::nullopt;
}

bool operator==(const Param& a, const Param& b) {
  return a.name == b.name && SameType(a.type, b.type) && a.role == b.role &&
         a.pointed_length == b.pointed_length &&
         a.array_syntax == b.array_syntax;
}

bool operator==(const FunctionSignature& a, const FunctionSignature& b) {
  return a.name == b.name && a.params == b.params &&
         SameType(a.return_type, b.return_type) && a.is_static == b.is_static;
}

std::string TypeEnvironment::TagKey(TypeKind kind, std::string_view tag) {
  std::string key(TypeKindName(kind));
  key += ' ';
  key += tag;
  return key;
}

void TypeEnvironment::AddTag(const TypeRef& type) {
  std::string key = TagKey(type->kind, type->name);
  auto it = tags_.find(key);
  if (it != tags_.end()) {
    if (SameType(it->second, type)) return;
    throw Error(ErrorCode::kSyntaxError, "redefinition of " + key);
  }
  tags_.emplace(key, type);
  entries_.push_back({EntryKind::kTag, key});
}

void TypeEnvironment::AddTypedef(const std::string& name, const TypeRef& alias) {
  auto it = typedefs_.find(name);
  if (it != typedefs_.end()) {
    if (SameType(it->second, alias)) return;
    throw Error(ErrorCode::kSyntaxError, "conflicting typedef " + name);
  }
  typedefs_.emplace(name, alias);
  entries_.push_back({EntryKind::kTypedef, name});
}

void TypeEnvironment::AddSignature(const FunctionSignature& signature) {
  auto it = signatures_.find(signature.name);
  if (it == signatures_.end()) {
    signatures_.emplace(signature.name, signature);
    signature_order_.push_back(signature.name);
    return;
  }
  // A definition refines an earlier prototype (parameter names may differ).
  it->second = signature;
}

void TypeEnvironment::AddDefinition(const FunctionDefinition& definition) {
  AddSignature(definition.signature);
  definitions_.push_back(definition);
}

void TypeEnvironment::AddEnumConstant(const std::string& name,
                                      std::int64_t value) {
  enum_constants_[name] = value;
}

void TypeEnvironment::AddDiagnostic(Diagnostic diagnostic) {
  diagnostics_.push_back(std::move(diagnostic));
}

TypeRef TypeEnvironment::FindTypedef(std::string_view name) const {
  auto it = typedefs_.find(name);
  return it == typedefs_.end() ? nullptr : it->second;
}

TypeRef TypeEnvironment::FindTag(TypeKind kind, std::string_view tag) const {
  auto it = tags_.find(TagKey(kind, tag));
  return it == tags_.end() ? nullptr : it->second;
}

const FunctionSignature* TypeEnvironment::FindSignature(
    std::string_view name) const {
  auto it = signatures_.find(name);
  return it == signatures_.end() ? nullptr : &it->second;
}

const FunctionDefinition* TypeEnvironment::FindDefinition(
    std::string_view name) const {
  for (const auto& d : definitions_) {
    if (d.signature.name == name) return &d;
  }
  return nullptr;
}

std::optional<std::int64_t> TypeEnvironment::FindEnumConstant(
    std::string_view name) const {
  auto it = enum_constants_.find(name);
  if (it == enum_constants_.end()) return std::nullopt;
  return it->second;
}

TypeRef TypeEnvironment::Resolve(const TypeRef& type) const {
  TypeRef current = type;
  // Alias chains are acyclic by construction (a typedef can only name
  // types declared before it), so this terminates.
  while (current && current->kind == TypeKind::kAlias) {
    if (!current->target) {
      throw Error(ErrorCode::kUnresolvableType,
                  "unknown type name '" + current->name + "'");
    }
    current = current->target;
  }
  if (!current) throw Error(ErrorCode::kUnresolvableType, "null type");
  if (!current->complete) {
    TypeRef def = FindTag(current->kind, current->name);
    if (!def) {
      throw Error(ErrorCode::kUnresolvableType,
                  "incomplete type '" + TagKey(current->kind, current->name) +
                      "'");
    }
    current = def;
  }
  return current;
}

bool TypeEnvironment::IsResolvable(const TypeRef& type) const {
  try {
    Resolve(type);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool operator==(const TypeEnvironment& a, const TypeEnvironment& b) {
  auto same_map = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (const auto& [k, v] : x) {
      auto it = y.find(k);
      if (it == y.end() || !SameType(v, it->second)) return false;
    }
    return true;
  };
  return same_map(a.tags_, b.tags_) && same_map(a.typedefs_, b.typedefs_) &&
         a.signatures_ == b.signatures_ &&
         a.enum_constants_ == b.enum_constants_;
}

}  // namespace motif::c_model
