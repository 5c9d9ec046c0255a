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

#include "motif/c_model/render.h"

#include <set>
#include <string>
#include <vector>

namespace motif::c_model {
namespace {

std::string IntegerSpelling(bool is_signed, int width) {
  switch (width) {
    case 8: return is_signed ? "signed char" : "unsigned char";
    case 16: return is_signed ? "short" : "unsigned short";
    case 32: return is_signed ? "int" : "unsigned int";
    default: return is_signed ? "long long" : "unsigned long long";
  }
}

std::string RecordBody(const CType& t) {
  std::string out = "{ ";
  for (const Field& f : t.fields) {
    out += RenderDeclaration(f.type, f.name);
    out += "; ";
  }
  out += "}";
  return out;
}

std::string EnumBody(const CType& t) {
  std::string out = "{ ";
  for (std::size_t i = 0; i < t.enumerators.size(); ++i) {
    if (i) out += ", ";
    out += t.enumerators[i].name + " = " + std::to_string(t.enumerators[i].value);
  }
  out += " }";
  return out;
}

std::string BaseSpelling(const CType& t) {
  switch (t.kind) {
    case TypeKind::kVoid: return "void";
    case TypeKind::kBool: return "_Bool";
    case TypeKind::kChar: return "char";
    case TypeKind::kSignedInt: return IntegerSpelling(true, t.width);
    case TypeKind::kUnsignedInt: return IntegerSpelling(false, t.width);
    case TypeKind::kFloat32: return "float";
    case TypeKind::kFloat64: return "double";
    case TypeKind::kAlias: return t.name;
    case TypeKind::kStruct:
    case TypeKind::kUnion: {
      std::string kw = t.kind == TypeKind::kStruct ? "struct" : "union";
      if (!t.name.empty()) return kw + " " + t.name;
      return kw + " " + RecordBody(t);
    }
    case TypeKind::kEnum:
      if (!t.name.empty()) return "enum " + t.name;
      return "enum " + EnumBody(t);
    case TypeKind::kPointer:
    case TypeKind::kArray:
      break;
  }
  return "?";
}

class Collector {
 public:
  explicit Collector(const TypeEnvironment& env) : env_(env) {}

  void Visit(const TypeRef& type) {
    if (!type) return;
    switch (type->kind) {
      case TypeKind::kAlias:
        if (!type->builtin_alias && env_.FindTypedef(type->name)) {
          if (keys_.insert(type->name).second) Visit(type->target);
        }
        return;
      case TypeKind::kPointer:
      case TypeKind::kArray:
        Visit(type->target);
        return;
      case TypeKind::kStruct:
      case TypeKind::kUnion:
      case TypeKind::kEnum: {
        TypeRef def = type;
        if (!type->name.empty()) {
          std::string key = std::string(TypeKindName(type->kind)) + " " + type->name;
          def = env_.FindTag(type->kind, type->name);
          if (!def || !keys_.insert(key).second) return;
        }
        for (const Field& f : def->fields) Visit(f.type);
        return;
      }
      default:
        return;
    }
  }

  const std::set<std::string>& keys() const { return keys_; }

 private:
  const TypeEnvironment& env_;
  std::set<std::string> keys_;
};

std::string RenderEntry(const TypeEnvironment& env,
                        const TypeEnvironment::Entry& entry) {
  if (entry.kind == TypeEnvironment::EntryKind::kTypedef) {
    TypeRef alias = env.FindTypedef(entry.name);
    return "typedef " + RenderDeclaration(alias->target, entry.name) + ";\n";
  }
  std::string kind = entry.name.substr(0, entry.name.find(' '));
  std::string tag = entry.name.substr(entry.name.find(' ') + 1);
  TypeKind k = kind == "struct" ? TypeKind::kStruct
               : kind == "union" ? TypeKind::kUnion
                                 : TypeKind::kEnum;
  TypeRef def = env.FindTag(k, tag);
  if (k == TypeKind::kEnum) return entry.name + " " + EnumBody(*def) + ";\n";
  return entry.name + " " + RecordBody(*def) + ";\n";
}

}  // namespace

std::string RenderDeclaration(const TypeRef& type, const std::string& name) {
  const CType& t = *type;
  if (t.kind == TypeKind::kPointer) {
    std::string inner = t.is_const ? "* const" : "*";
    if (!name.empty()) inner += t.is_const ? " " + name : name;
    if (t.target->kind == TypeKind::kArray) inner = "(" + inner + ")";
    return RenderDeclaration(t.target, inner);
  }
  if (t.kind == TypeKind::kArray) {
    return RenderDeclaration(t.target, name + "[" + std::to_string(t.length) + "]");
  }
  std::string base = (t.is_const ? "const " : "") + BaseSpelling(t);
  if (name.empty()) return base;
  if (name.front() == '[') return base + name;
  return base + " " + name;
}

std::string RenderParam(const Param& param) {
  if (param.array_syntax && param.type->kind == TypeKind::kPointer) {
    std::string suffix = "[";
    if (param.pointed_length) suffix += std::to_string(*param.pointed_length);
    suffix += "]";
    return RenderDeclaration(param.type->target, param.name + suffix);
  }
  return RenderDeclaration(param.type, param.name);
}

std::string RenderPrototype(const FunctionSignature& signature,
                            const std::string& name_override) {
  std::string params;
  for (std::size_t i = 0; i < signature.params.size(); ++i) {
    if (i) params += ", ";
    params += RenderParam(signature.params[i]);
  }
  if (params.empty()) params = "void";
  std::string name = name_override.empty() ? signature.name : name_override;
  std::string out = signature.is_static ? "static " : "";
  out += RenderDeclaration(signature.return_type, name + "(" + params + ")");
  return out;
}

std::string RenderTypeDeclarations(const TypeEnvironment& env,
                                   const std::vector<TypeRef>& roots) {
  Collector collector(env);
  for (const TypeRef& r : roots) collector.Visit(r);
  std::string out;
  for (const auto& entry : env.entries()) {
    if (collector.keys().count(entry.name)) out += RenderEntry(env, entry);
  }
  return out;
}

std::string RenderEnvironment(const TypeEnvironment& env) {
  std::string out;
  for (const auto& entry : env.entries()) out += RenderEntry(env, entry);
  for (const auto& name : env.signature_order()) {
    out += RenderPrototype(*env.FindSignature(name)) + ";\n";
  }
  return out;
}

}  // namespace motif::c_model
