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

#ifndef MOTIF_C_MODEL_TYPES_H_
#define MOTIF_C_MODEL_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motif/error.h"

namespace motif::c_model {

enum class TypeKind {
  kVoid,
  kBool,
  kChar,
  kSignedInt,
  kUnsignedInt,
  kFloat32,
  kFloat64,
  kEnum,
  kStruct,
  kUnion,
  kPointer,
  kArray,
  kAlias,
};

std::string_view TypeKindName(TypeKind kind);

struct CType;
using TypeRef = std::shared_ptr<const CType>;

struct Field {
  std::string name;
  TypeRef type;
};

struct Enumerator {
  std::string name;
  std::int64_t value = 0;
};

// A resolved C type. Instances are immutable once built and shared freely.
//
// Tagged struct/union/enum types referenced before (or inside) their own
// definition are represented by an incomplete node carrying only the tag;
// TypeEnvironment::Resolve() swaps in the complete definition. An alias
// whose target is null names a type the parser never saw defined.
struct CType {
  TypeKind kind = TypeKind::kVoid;
  int width = 0;                    // bits, integer kinds only
  std::string name;                 // tag or alias name; empty if anonymous
  std::vector<Field> fields;        // struct/union members in order
  std::vector<Enumerator> enumerators;
  TypeRef target;                   // pointee, element or alias target
  std::uint64_t length = 0;         // array element count
  bool is_const = false;
  bool complete = true;
  bool builtin_alias = false;       // <stdint.h>/<stddef.h> names

  static TypeRef Void();
  static TypeRef Bool();
  static TypeRef Char();
  static TypeRef SignedInt(int width);
  static TypeRef UnsignedInt(int width);
  static TypeRef Float32();
  static TypeRef Float64();
  static TypeRef Pointer(TypeRef pointee);
  static TypeRef Array(TypeRef element, std::uint64_t length);
  static TypeRef Alias(std::string name, TypeRef target);
  static TypeRef Struct(std::string tag, std::vector<Field> fields);
  static TypeRef Union(std::string tag, std::vector<Field> fields);
  static TypeRef Enum(std::string tag, std::vector<Enumerator> enumerators);
  static TypeRef TagReference(TypeKind kind, std::string tag);

  bool IsInteger() const {
    return kind == TypeKind::kSignedInt || kind == TypeKind::kUnsignedInt;
  }
  bool IsRecord() const {
    return kind == TypeKind::kStruct || kind == TypeKind::kUnion;
  }
  // Scalars a driver can print with a single format directive.
  bool IsArithmetic() const;

  friend bool operator==(const CType& a, const CType& b);
};

// Deep structural equality; null refs compare equal only to null.
bool SameType(const TypeRef& a, const TypeRef& b);

// Returns a copy of `type` with the top-level const qualifier removed.
TypeRef WithoutConst(const TypeRef& type);
TypeRef WithConst(const TypeRef& type);

enum class ParamRole { kAuto, kInput, kOutput, kInOut };

std::string_view ParamRoleName(ParamRole role);
std::optional<ParamRole> ParseParamRole(std::string_view text);

struct Param {
  std::string name;
  TypeRef type;
  ParamRole role = ParamRole::kAuto;
  // Number of pointed elements; only meaningful for pointer params.
  std::optional<std::uint64_t> pointed_length;
  // Declared with array syntax (`int a[]`, `int a[8]`).
  bool array_syntax = false;

  friend bool operator==(const Param& a, const Param& b);
};

struct FunctionSignature {
  std::string name;
  std::vector<Param> params;
  TypeRef return_type;
  bool is_static = false;

  friend bool operator==(const FunctionSignature& a,
                         const FunctionSignature& b);
};

// Byte ranges of a function definition inside the parsed source.
struct FunctionDefinition {
  FunctionSignature signature;
  std::size_t begin = 0;        // first token of the declaration
  std::size_t end = 0;          // one past the closing brace
  std::size_t body_begin = 0;   // the opening brace
  std::size_t name_offset = 0;  // the function identifier
};

struct Diagnostic {
  ErrorCode code = ErrorCode::kSyntaxError;
  SourceLocation location;
  std::string message;
};

class TypeEnvironment {
 public:
  enum class EntryKind { kTag, kTypedef };
  struct Entry {
    EntryKind kind;
    std::string name;  // "struct S", "union U", "enum E" or a typedef name
  };

  // Registration. Each throws SyntaxError on a conflicting redefinition.
  void AddTag(const TypeRef& type);
  void AddTypedef(const std::string& name, const TypeRef& alias);
  void AddSignature(const FunctionSignature& signature);
  void AddDefinition(const FunctionDefinition& definition);
  void AddEnumConstant(const std::string& name, std::int64_t value);
  void AddDiagnostic(Diagnostic diagnostic);

  TypeRef FindTypedef(std::string_view name) const;
  TypeRef FindTag(TypeKind kind, std::string_view tag) const;
  const FunctionSignature* FindSignature(std::string_view name) const;
  const FunctionDefinition* FindDefinition(std::string_view name) const;
  std::optional<std::int64_t> FindEnumConstant(std::string_view name) const;

  // Strips aliases and completes tag references. Throws UnresolvableType
  // when an alias is dangling or a tag was never defined.
  TypeRef Resolve(const TypeRef& type) const;
  bool IsResolvable(const TypeRef& type) const;

  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::string>& signature_order() const {
    return signature_order_;
  }
  const std::vector<FunctionDefinition>& definitions() const {
    return definitions_;
  }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  // Compares named types and signatures; ignores diagnostics and
  // definition byte spans.
  friend bool operator==(const TypeEnvironment& a, const TypeEnvironment& b);

 private:
  static std::string TagKey(TypeKind kind, std::string_view tag);

  std::vector<Entry> entries_;
  std::map<std::string, TypeRef, std::less<>> tags_;
  std::map<std::string, TypeRef, std::less<>> typedefs_;
  std::map<std::string, FunctionSignature, std::less<>> signatures_;
  std::vector<std::string> signature_order_;
  std::vector<FunctionDefinition> definitions_;
  std::map<std::string, std::int64_t, std::less<>> enum_constants_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace motif::c_model

#endif  // MOTIF_C_MODEL_TYPES_H_
