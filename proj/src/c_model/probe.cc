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

#include "motif/c_model/probe.h"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "motif/c_model/render.h"

namespace motif::c_model {

std::string DefaultProbeName(const TypeRef& type) {
  const CType& t = *type;
  switch (t.kind) {
    case TypeKind::kVoid: return "void";
    case TypeKind::kBool: return "bool";
    case TypeKind::kChar: return "char";
    case TypeKind::kSignedInt: return "int" + std::to_string(t.width);
    case TypeKind::kUnsignedInt: return "uint" + std::to_string(t.width);
    case TypeKind::kFloat32: return "float32";
    case TypeKind::kFloat64: return "float64";
    case TypeKind::kAlias: return t.name;
    case TypeKind::kStruct:
    case TypeKind::kUnion:
    case TypeKind::kEnum:
      return std::string(TypeKindName(t.kind)) + "_" +
             (t.name.empty() ? "anon" : t.name);
    case TypeKind::kPointer: return "ptr_" + DefaultProbeName(t.target);
    case TypeKind::kArray:
      return DefaultProbeName(t.target) + "_x" + std::to_string(t.length);
  }
  return "type";
}

std::string EmitLayoutProbe(const TypeEnvironment& env,
                            const std::vector<ProbeEntry>& entries) {
  std::vector<TypeRef> roots;
  for (const auto& e : entries) roots.push_back(e.type);

  std::ostringstream out;
  out << "#include <stddef.h>\n"
         "#include <stdint.h>\n"
         "#include <stdio.h>\n\n";
  out << RenderTypeDeclarations(env, roots);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << "typedef " << RenderDeclaration(entries[i].type, "probe_t" + std::to_string(i))
        << ";\n";
  }
  out << "\nint main(void) {\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string alias = "probe_t" + std::to_string(i);
    out << "  printf(\"%s %zu %zu\", \"" << entries[i].name << "\", sizeof("
        << alias << "), _Alignof(" << alias << "));\n";
    TypeRef resolved = env.Resolve(entries[i].type);
    if (resolved->kind == TypeKind::kStruct) {
      for (const Field& f : resolved->fields) {
        out << "  printf(\" %zu\", offsetof(" << alias << ", " << f.name << "));\n";
      }
    }
    out << "  printf(\"\\n\");\n";
  }
  out << "  return 0;\n}\n";
  return out.str();
}

std::string Mismatch::ToString() const {
  std::string s = type;
  if (field) s += "." + *field;
  s += " " + property + ": computed " + std::to_string(computed) +
       ", observed " + std::to_string(observed);
  return s;
}

namespace {

std::uint64_t ParseNumber(std::string_view word, int line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw Error(ErrorCode::kMalformedProbeOutput,
                "line " + std::to_string(line_no) + ": '" + std::string(word) +
                    "' is not a number");
  }
  return value;
}

}  // namespace

std::vector<Mismatch> ReconcileLayouts(
    const std::map<std::string, Layout>& computed,
    std::string_view probe_output) {
  if (!probe_output.empty() && probe_output.back() != '\n') {
    throw Error(ErrorCode::kMalformedProbeOutput, "truncated final record");
  }
  struct Observed {
    std::uint64_t size, alignment;
    std::vector<std::uint64_t> offsets;
  };
  std::map<std::string, Observed> observed;
  std::istringstream in{std::string(probe_output)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> parts;
    for (std::string w; words >> w;) parts.push_back(w);
    if (parts.size() < 3) {
      throw Error(ErrorCode::kMalformedProbeOutput,
                  "line " + std::to_string(line_no) + ": expected '<name> <size> <align>'");
    }
    Observed o{ParseNumber(parts[1], line_no), ParseNumber(parts[2], line_no), {}};
    for (std::size_t i = 3; i < parts.size(); ++i) {
      o.offsets.push_back(ParseNumber(parts[i], line_no));
    }
    observed[parts[0]] = std::move(o);
  }

  std::vector<Mismatch> mismatches;
  for (const auto& [name, layout] : computed) {
    auto it = observed.find(name);
    if (it == observed.end()) {
      throw Error(ErrorCode::kMalformedProbeOutput, "no record for '" + name + "'");
    }
    const Observed& o = it->second;
    if (o.size != layout.size) {
      mismatches.push_back({name, std::nullopt, "size", layout.size, o.size});
    }
    if (o.alignment != layout.alignment) {
      mismatches.push_back({name, std::nullopt, "alignment", layout.alignment, o.alignment});
    }
    if (o.offsets.size() != layout.field_offsets.size()) {
      mismatches.push_back({name, std::nullopt, "field-count",
                            layout.field_offsets.size(), o.offsets.size()});
      continue;
    }
    for (std::size_t i = 0; i < o.offsets.size(); ++i) {
      if (o.offsets[i] != layout.field_offsets[i].second) {
        mismatches.push_back({name, layout.field_offsets[i].first, "offset",
                              layout.field_offsets[i].second, o.offsets[i]});
      }
    }
  }
  return mismatches;
}

}  // namespace motif::c_model
