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

#include "motif/driver_synth/driver_synth.h"

#include <sstream>
#include <utility>

#include "motif/c_model/render.h"
#include "motif/error.h"

namespace motif::driver_synth {

using c_model::CType;
using c_model::Param;
using c_model::ParamRole;
using c_model::TypeKind;
using c_model::TypeRef;

std::string_view DriverKindName(DriverKind kind) {
  switch (kind) {
    case DriverKind::kFuzzing: return "fuzzing";
    case DriverKind::kFalsePositive: return "false-positive";
    case DriverKind::kTest: return "test";
  }
  return "?";
}

namespace {

struct ParamPlan {
  const Param* param = nullptr;
  TypeRef element;  // variable type, or array element type
  InputSlot slot;
  bool array = false;  // declared as element[count]
};

struct Plan {
  std::vector<ParamPlan> params;
  TypeRef return_type;  // null for void
  std::uint64_t consumed = 0;
};

[[noreturn]] void Unsupported(const DriverSpec& spec, const std::string& what) {
  throw Error(ErrorCode::kUnsupportedSignature, spec.signature.name + ": " + what);
}

std::uint64_t SizeOf(const DriverSpec& spec, const TypeRef& type, const std::string& what) {
  try {
    return c_model::LayoutOf(type, spec.env, spec.abi).size;
  } catch (const Error& e) {
    Unsupported(spec, what + ": " + e.what());
  }
}

Plan MakePlan(const DriverSpec& spec) {
  Plan plan;
  if (spec.array_default_length == 0) Unsupported(spec, "array default length must be positive");
  for (const auto& [name, length] : spec.pointer_lengths) {
    bool found = false;
    for (const Param& p : spec.signature.params) found = found || p.name == name;
    if (!found) Unsupported(spec, "pointer length given for unknown parameter '" + name + "'");
    if (length == 0) Unsupported(spec, "pointer length of '" + name + "' must be positive");
  }
  for (const Param& p : spec.signature.params) {
    ParamPlan pp;
    pp.param = &p;
    pp.slot.name = p.name;
    if (!spec.env.IsResolvable(p.type)) Unsupported(spec, "unresolvable type of '" + p.name + "'");
    TypeRef resolved = spec.env.Resolve(p.type);
    if (resolved->kind == TypeKind::kPointer) {
      pp.slot.pointer = true;
      auto configured = spec.pointer_lengths.find(p.name);
      std::optional<std::uint64_t> length;
      if (configured != spec.pointer_lengths.end()) {
        length = configured->second;
      } else if (p.pointed_length) {
        length = p.pointed_length;
      }
      TypeRef pointee = resolved->target;
      if (!spec.env.IsResolvable(pointee)) {
        Unsupported(spec, "unresolvable pointee of '" + p.name + "'");
      }
      TypeKind pk = spec.env.Resolve(pointee)->kind;
      if (pk == TypeKind::kPointer) Unsupported(spec, "pointer to pointer '" + p.name + "'");
      if (pk == TypeKind::kVoid) {
        if (!length) Unsupported(spec, "void pointee of '" + p.name + "' needs a length");
        pointee = CType::UnsignedInt(8);
      }
      if (!length) length = p.array_syntax ? spec.array_default_length : 1;
      pp.element = c_model::WithoutConst(pointee);
      pp.slot.count = *length;
      pp.array = *length > 1 || p.array_syntax;
    } else if (resolved->kind == TypeKind::kVoid) {
      Unsupported(spec, "void parameter '" + p.name + "'");
    } else {
      pp.element = c_model::WithoutConst(p.type);
    }
    pp.slot.size = SizeOf(spec, pp.element, "parameter '" + p.name + "'") * pp.slot.count;
    pp.slot.offset = plan.consumed;
    plan.consumed += pp.slot.size;
    plan.params.push_back(std::move(pp));
  }
  const TypeRef& ret = spec.signature.return_type;
  if (!spec.env.IsResolvable(ret)) Unsupported(spec, "unresolvable return type");
  TypeKind rk = spec.env.Resolve(ret)->kind;
  if (rk == TypeKind::kPointer) Unsupported(spec, "pointer return type");
  if (rk != TypeKind::kVoid) {
    plan.return_type = c_model::WithoutConst(ret);
    SizeOf(spec, plan.return_type, "return type");
  }
  return plan;
}

class Emitter {
 public:
  void Line(const std::string& s = "") {
    if (!s.empty()) out_ << std::string(indent_, ' ') << s;
    out_ << '\n';
  }
  void Raw(const std::string& s) { out_ << s; }
  void Indent(int d) { indent_ += d; }
  void Snippet(const std::optional<std::string>& snippet) {
    if (!snippet) return;
    std::istringstream in(*snippet);
    for (std::string line; std::getline(in, line);) Line(line);
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  int indent_ = 0;
};

std::string Declare(const ParamPlan& pp, const std::string& var) {
  if (pp.array) return c_model::RenderDeclaration(CType::Array(pp.element, pp.slot.count), var);
  return c_model::RenderDeclaration(pp.element, var);
}

std::string Argument(const ParamPlan& pp, const std::string& var) {
  if (pp.slot.pointer && !pp.array) return "&" + var;
  return var;
}

// Pointer arguments are arrays or addresses; both are passed to the
// runtime as addresses.
std::string Address(const ParamPlan& pp, const std::string& var) {
  return pp.array ? var : "&" + var;
}

std::string TypeLabel(const TypeRef& type) {
  if (type->kind == TypeKind::kAlias) return type->name;
  return c_model::RenderDeclaration(type, "");
}

void EmitPreamble(Emitter& e, const DriverSpec& spec, const Plan& plan,
                  const std::string& title, bool with_mutant, bool with_stdio) {
  e.Line("/* " + title + " for " + spec.signature.name + ". Generated by motif. */");
  if (with_stdio) e.Line("#include <stdio.h>");
  e.Line("#include \"" + std::string(kRuntimeHeader) + "\"");
  e.Line();
  std::vector<TypeRef> roots;
  for (const Param& p : spec.signature.params) roots.push_back(p.type);
  roots.push_back(spec.signature.return_type);
  std::string types = c_model::RenderTypeDeclarations(spec.env, roots);
  if (!types.empty()) {
    e.Raw(types);
    if (types.back() != '\n') e.Line();
    e.Line();
  }
  e.Line(c_model::RenderPrototype(spec.signature) + ";");
  if (with_mutant) {
    e.Line(c_model::RenderPrototype(spec.signature, "mut_" + spec.signature.name) + ";");
  }
  e.Line();
  e.Line("int main(int argc, char **argv) {");
  e.Indent(2);
  if (spec.checkpoint_channel == CheckpointChannel::kStderr) e.Line("motif_log_to_stderr();");
  e.Line("load_file(argc > 1 ? argv[1] : 0, " + std::to_string(plan.consumed) + ");");
  e.Line();
}

std::string CallArguments(const Plan& plan, const std::string& prefix) {
  std::string args;
  for (const ParamPlan& pp : plan.params) {
    if (!args.empty()) args += ", ";
    args += Argument(pp, prefix + pp.param->name);
  }
  return args;
}

GeneratedDriver Finish(DriverKind kind, std::string source, const Plan& plan) {
  GeneratedDriver d;
  d.kind = kind;
  d.source = std::move(source);
  d.consumed_input_bytes = plan.consumed;
  for (const ParamPlan& pp : plan.params) d.slots.push_back(pp.slot);
  return d;
}

// printf directive and argument cast for a scalar; empty for aggregates.
std::pair<std::string, std::string> ScalarFormat(const DriverSpec& spec, const TypeRef& type) {
  TypeRef r = spec.env.Resolve(type);
  switch (r->kind) {
    case TypeKind::kBool:
    case TypeKind::kChar:
    case TypeKind::kEnum:
      return {"%d", "(int)"};
    case TypeKind::kSignedInt:
      if (r->width == 64) return {"%lld", "(long long)"};
      return {"%d", "(int)"};
    case TypeKind::kUnsignedInt:
      if (r->width == 64) return {"%llu", "(unsigned long long)"};
      return {"%u", "(unsigned)"};
    case TypeKind::kFloat32:
      return {"%.9g", "(double)"};
    case TypeKind::kFloat64:
      return {"%.17g", "(double)"};
    default:
      return {};
  }
}

bool Printed(const ParamPlan& pp) {
  switch (pp.param->role) {
    case ParamRole::kOutput:
    case ParamRole::kInOut:
      return true;
    case ParamRole::kInput:
      return false;
    case ParamRole::kAuto:
      return pp.slot.pointer;
  }
  return false;
}

std::string TestVariable(const std::string& name) {
  if (name == "argc" || name == "argv" || name == "_return" || name == "motif_k" ||
      name == "main") {
    return name + "_";
  }
  return name;
}

// C string literal for `s`, optionally ending in a newline escape.
std::string Quote(const std::string& s, bool newline = false) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  if (newline) out += "\\n";
  return out + "\"";
}

}  // namespace

std::vector<InputSlot> InputLayout(const DriverSpec& spec) {
  Plan plan = MakePlan(spec);
  std::vector<InputSlot> slots;
  for (const ParamPlan& pp : plan.params) slots.push_back(pp.slot);
  return slots;
}

GeneratedDriver GenerateFuzzingDriver(const DriverSpec& spec) {
  Plan plan = MakePlan(spec);
  const std::string& name = spec.signature.name;
  Emitter e;
  EmitPreamble(e, spec, plan, "Fuzzing driver", true, false);
  e.Line("int ret = 0;");
  if (!plan.params.empty()) {
    e.Line("/* Variables for the original function */");
    for (const ParamPlan& pp : plan.params) e.Line(Declare(pp, "origin_" + pp.param->name) + ";");
    e.Line("/* Variables for the mutated function */");
    for (const ParamPlan& pp : plan.params) e.Line(Declare(pp, "mut_" + pp.param->name) + ";");
  }
  if (plan.return_type) {
    e.Line("/* Variables for the return values */");
    e.Line(c_model::RenderDeclaration(plan.return_type, "origin_return") + ";");
    e.Line(c_model::RenderDeclaration(plan.return_type, "mut_return") + ";");
  }
  e.Line();

  auto call = [&](const std::string& prefix, const std::string& callee, const std::string& tag) {
    for (const ParamPlan& pp : plan.params) {
      std::string var = prefix + pp.param->name;
      e.Line("get_value(" + Address(pp, var) + ", sizeof(" + var + "));");
    }
    e.Snippet(spec.setup_snippet);
    e.Line("motif_checkpoint(\"CALL_" + tag + "\");");
    std::string invoke = callee + "(" + CallArguments(plan, prefix) + ");";
    e.Line(plan.return_type ? prefix + "return = " + invoke : invoke);
    e.Line("motif_checkpoint(\"RET_" + tag + "\");");
  };
  call("origin_", name, "ORIG");
  e.Line();
  e.Line("seek_data_index(0);");
  call("mut_", "mut_" + name, "MUT");
  e.Line();

  for (const ParamPlan& pp : plan.params) {
    if (spec.excluded.count(pp.param->name)) continue;
    std::string o = "origin_" + pp.param->name;
    std::string m = "mut_" + pp.param->name;
    e.Line("ret |= compare_value(" + Address(pp, o) + ", " + Address(pp, m) + ", sizeof(" + o +
           "));");
  }
  if (plan.return_type) {
    e.Line("ret |= compare_value(&origin_return, &mut_return, sizeof(origin_return));");
  }
  e.Line("if (ret != 0) {");
  e.Line("  motif_checkpoint(\"DIFF\");");
  e.Line("  safe_abort();");
  e.Line("}");
  e.Line("motif_checkpoint(\"EQ\");");
  e.Line("return 0;");
  e.Indent(-2);
  e.Line("}");
  return Finish(DriverKind::kFuzzing, e.str(), plan);
}

GeneratedDriver GenerateFalsePositiveDriver(const DriverSpec& spec) {
  GeneratedDriver d = GenerateFuzzingDriver(spec);
  d.kind = DriverKind::kFalsePositive;
  const std::string from_title = "/* Fuzzing driver";
  d.source.replace(0, from_title.size(), "/* False-positive driver");
  const std::string from = "mut_" + spec.signature.name + "(";
  const std::string to = spec.signature.name + "(";
  for (std::size_t pos = d.source.find(from); pos != std::string::npos;
       pos = d.source.find(from, pos + to.size())) {
    d.source.replace(pos, from.size(), to);
  }
  return d;
}

GeneratedDriver GenerateTestDriver(const DriverSpec& spec) {
  Plan plan = MakePlan(spec);
  Emitter e;
  EmitPreamble(e, spec, plan, "Test driver", false, true);
  for (const ParamPlan& pp : plan.params) e.Line(Declare(pp, TestVariable(pp.param->name)) + ";");
  if (plan.return_type) e.Line(c_model::RenderDeclaration(plan.return_type, "_return") + ";");
  for (const ParamPlan& pp : plan.params) {
    std::string var = TestVariable(pp.param->name);
    e.Line("get_value(" + Address(pp, var) + ", sizeof(" + var + "));");
  }
  e.Line();
  e.Snippet(spec.setup_snippet);
  std::string invoke = spec.signature.name + "(";
  for (std::size_t i = 0; i < plan.params.size(); ++i) {
    if (i > 0) invoke += ", ";
    invoke += Argument(plan.params[i], TestVariable(plan.params[i].param->name));
  }
  invoke += ");";
  e.Line(plan.return_type ? "_return = " + invoke : invoke);
  e.Line();

  auto print = [&](const std::string& label, const TypeRef& type, const std::string& var,
                   bool is_array, std::uint64_t count) {
    auto [fmt, cast] = ScalarFormat(spec, type);
    std::string type_label = TypeLabel(type);
    if (fmt.empty() || (is_array && count == 0)) {
      std::string shown = is_array ? type_label + "[" + std::to_string(count) + "]" : type_label;
      std::string addr = is_array ? var : "&" + var;
      e.Line("printf_struct(" + Quote(label + " (" + shown + ")=") + ", " + addr + ", sizeof(" +
             var + "));");
    } else if (is_array) {
      e.Line("{");
      e.Line("  size_t motif_k;");
      e.Line("  for (motif_k = 0; motif_k < " + std::to_string(count) + "; ++motif_k)");
      e.Line("    printf(" + Quote(label + "[%zu] (" + type_label + ") = " + fmt, true) +
             ", motif_k, " + cast + var + "[motif_k]);");
      e.Line("}");
    } else {
      e.Line("printf(" + Quote(label + " (" + type_label + ") = " + fmt, true) + ", " + cast +
             var + ");");
    }
  };
  for (const ParamPlan& pp : plan.params) {
    if (!Printed(pp)) continue;
    std::string var = TestVariable(pp.param->name);
    print(pp.param->name, pp.element, var, pp.array, pp.slot.count);
  }
  if (plan.return_type) print("return", plan.return_type, "_return", false, 1);
  e.Line("return 0;");
  e.Indent(-2);
  e.Line("}");
  return Finish(DriverKind::kTest, e.str(), plan);
}

}  // namespace motif::driver_synth
