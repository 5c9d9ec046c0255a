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

#include "motif/c_model/parser.h"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "motif/c_model/lexer.h"

namespace motif::c_model {
namespace {

struct DeclSpec {
  TypeRef type;
  bool is_typedef = false;
  bool is_static = false;
};

struct DeclaratorResult {
  std::string name;
  SourceLocation location;
  TypeRef type;  // object type, or the return type of a function
  bool is_function = false;
  std::vector<Param> params;
  bool outer_unsized = false;  // `x[]`: outermost array length unknown
};

// Binary operator precedence for integer constant expressions.
int Precedence(const Token& t) {
  if (t.kind != TokenKind::kPunct) return -1;
  static const std::pair<std::string_view, int> kTable[] = {
      {"||", 1}, {"&&", 2}, {"|", 3},  {"^", 4},  {"&", 5},
      {"==", 6}, {"!=", 6}, {"<", 7},  {">", 7},  {"<=", 7},
      {">=", 7}, {"<<", 8}, {">>", 8}, {"+", 9},  {"-", 9},
      {"*", 10}, {"/", 10}, {"%", 10}};
  for (const auto& [op, prec] : kTable) {
    if (t.text == op) return prec;
  }
  return -1;
}

std::int64_t ParseIntegerLiteral(const Token& t) {
  std::string digits = t.text;
  while (!digits.empty() &&
         (digits.back() == 'u' || digits.back() == 'U' ||
          digits.back() == 'l' || digits.back() == 'L')) {
    digits.pop_back();
  }
  char* end = nullptr;
  unsigned long long v = std::strtoull(digits.c_str(), &end, 0);
  if (end == digits.c_str() || *end != '\0') {
    throw Error(ErrorCode::kSyntaxError, t.location,
                "invalid integer literal '" + t.text + "'");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t ParseCharLiteral(const Token& t) {
  // 'a', '\n', '\0', '\x41'; prefixed wide literals are rejected.
  const std::string& s = t.text;
  if (s.size() < 3 || s.front() != '\'') {
    throw Error(ErrorCode::kUnsupportedConstruct, t.location,
                "character literal " + s);
  }
  if (s[1] != '\\') return static_cast<unsigned char>(s[1]);
  switch (s[2]) {
    case 'n': return '\n';
    case 't': return '\t';
    case 'r': return '\r';
    case '\\': return '\\';
    case '\'': return '\'';
    case '"': return '"';
    case 'x': return std::strtol(s.c_str() + 3, nullptr, 16);
    default: return std::strtol(s.c_str() + 2, nullptr, 8);
  }
}

class Parser {
 public:
  Parser(std::string_view source, const ParseConfig& config)
      : config_(config),
        tokens_(Tokenize(source, {.skip_directives = config.skip_directives})) {}

  TypeEnvironment Run() {
    while (!AtEnd()) {
      std::size_t start = pos_;
      try {
        ParseExternalDeclaration();
      } catch (const Error& e) {
        env_.AddDiagnostic({e.code(),
                            e.has_location() ? e.location()
                                             : tokens_[start].location,
                            e.what()});
        Recover(start);
      }
    }
    return std::move(env_);
  }

 private:
  const Token& Cur() const { return tokens_[pos_]; }
  const Token& Ahead(std::size_t k) const {
    return tokens_[std::min(pos_ + k, tokens_.size() - 1)];
  }
  bool AtEnd() const { return Cur().kind == TokenKind::kEnd; }

  bool Accept(std::string_view s) {
    if (!Cur().Is(s)) return false;
    ++pos_;
    return true;
  }

  void Expect(std::string_view s) {
    if (Accept(s)) return;
    throw Error(ErrorCode::kSyntaxError, Cur().location,
                "expected '" + std::string(s) + "' before '" +
                    (AtEnd() ? std::string("end of input") : Cur().text) + "'");
  }

  [[noreturn]] static void Unsupported(const SourceLocation& at,
                                       const std::string& construct) {
    throw Error(ErrorCode::kUnsupportedConstruct, at, construct);
  }

  bool IsPlainIdentifier(const Token& t) const {
    return t.kind == TokenKind::kIdentifier && !IsCKeyword(t.text) &&
           !IsIgnorableWord(t.text);
  }

  static bool IsIgnorableWord(std::string_view w) {
    return w == "__attribute__" || w == "__declspec" || w == "__asm__" ||
           w == "asm" || w == "__extension__" || w == "__restrict" ||
           w == "__restrict__" || w == "__inline" || w == "__inline__" ||
           w == "__const" || w == "__volatile__" || w == "__thread";
  }

  std::size_t MatchingClose(std::size_t open, std::string_view o,
                            std::string_view c) const {
    int depth = 0;
    for (std::size_t i = open; i < tokens_.size(); ++i) {
      if (tokens_[i].Is(o)) ++depth;
      if (tokens_[i].Is(c) && --depth == 0) return i;
      if (tokens_[i].kind == TokenKind::kEnd) break;
    }
    throw Error(ErrorCode::kSyntaxError, tokens_[open].location,
                "unbalanced '" + std::string(o) + "'");
  }

  void SkipAttributes() {
    while (Cur().kind == TokenKind::kIdentifier &&
           (Cur().text == "__attribute__" || Cur().text == "__declspec" ||
            Cur().text == "__asm__" || Cur().text == "asm")) {
      ++pos_;
      if (Cur().Is("(")) pos_ = MatchingClose(pos_, "(", ")") + 1;
    }
  }

  // Resynchronizes after a failed external declaration: skips to the end
  // of a function body or to the next ';' at nesting depth zero.
  void Recover(std::size_t start) {
    pos_ = start;
    int depth = 0;
    while (!AtEnd()) {
      const Token& t = Cur();
      if (t.Is("{")) {
        if (depth == 0 && pos_ > start && tokens_[pos_ - 1].Is(")")) {
          try {
            pos_ = MatchingClose(pos_, "{", "}") + 1;
          } catch (const Error&) {
            pos_ = tokens_.size() - 1;
          }
          return;
        }
        ++depth;
      } else if (t.Is("(") || t.Is("[")) {
        ++depth;
      } else if (t.Is("}") || t.Is(")") || t.Is("]")) {
        if (depth > 0) --depth;
      } else if (t.Is(";") && depth == 0) {
        ++pos_;
        return;
      }
      ++pos_;
    }
  }

  void ParseExternalDeclaration() {
    std::size_t start = pos_;
    if (Accept(";")) return;
    if (Cur().Is("_Static_assert")) {
      Recover(start);
      return;
    }
    DeclSpec spec = ParseDeclSpecifiers(/*allow_storage=*/true);
    if (Accept(";")) return;
    bool first = true;
    for (;;) {
      DeclaratorResult d = ParseDeclarator(spec.type, /*abstract_ok=*/false);
      SkipAttributes();
      if (spec.is_typedef) {
        if (d.is_function) Unsupported(d.location, "function typedef");
        if (d.outer_unsized) Unsupported(d.location, "incomplete array typedef");
        env_.AddTypedef(d.name, CType::Alias(d.name, d.type));
      } else if (d.is_function) {
        FunctionSignature sig{d.name, d.params, d.type, spec.is_static};
        if (first && Cur().Is("{")) {
          FunctionDefinition def;
          def.signature = std::move(sig);
          def.begin = tokens_[start].location.offset;
          def.name_offset = d.location.offset;
          def.body_begin = Cur().location.offset;
          std::size_t close = MatchingClose(pos_, "{", "}");
          def.end = tokens_[close].end();
          pos_ = close + 1;
          env_.AddDefinition(def);
          return;
        }
        env_.AddSignature(sig);
      } else if (Accept("=")) {
        SkipInitializer();
      }
      first = false;
      if (Accept(",")) continue;
      Expect(";");
      return;
    }
  }

  void SkipInitializer() {
    int depth = 0;
    while (!AtEnd()) {
      const Token& t = Cur();
      if (depth == 0 && (t.Is(",") || t.Is(";"))) return;
      if (t.Is("(") || t.Is("{") || t.Is("[")) ++depth;
      if (t.Is(")") || t.Is("}") || t.Is("]")) --depth;
      ++pos_;
    }
  }

  DeclSpec ParseDeclSpecifiers(bool allow_storage) {
    DeclSpec spec;
    SourceLocation at = Cur().location;
    int n_short = 0, n_long = 0, n_signed = 0, n_unsigned = 0;
    bool saw_char = false, saw_int = false, saw_void = false,
         saw_bool = false, saw_float = false, saw_double = false;
    bool is_const = false;
    bool any = false;
    TypeRef named;
    auto basic_seen = [&] {
      return n_short || n_long || n_signed || n_unsigned || saw_char ||
             saw_int || saw_void || saw_bool || saw_float || saw_double;
    };

    while (Cur().kind == TokenKind::kIdentifier) {
      const Token& t = Cur();
      const std::string& w = t.text;
      if (w == "typedef" || w == "static" || w == "extern" ||
          w == "register" || w == "auto" || w == "_Thread_local") {
        if (!allow_storage && w != "register") {
          throw Error(ErrorCode::kSyntaxError, t.location,
                      "storage class '" + w + "' not allowed here");
        }
        if (w == "typedef") spec.is_typedef = true;
        if (w == "static") spec.is_static = true;
      } else if (w == "inline" || w == "_Noreturn" || w == "__inline" ||
                 w == "__inline__" || w == "__extension__" || w == "__thread" ||
                 w == "volatile" || w == "restrict" || w == "__restrict" ||
                 w == "__restrict__" || w == "__volatile__") {
      } else if (w == "const" || w == "__const") {
        is_const = true;
      } else if (w == "_Atomic" || w == "_Alignas" || w == "_Complex" ||
                 w == "_Imaginary" || w == "__int128") {
        Unsupported(t.location, w);
      } else if (w == "__attribute__" || w == "__declspec") {
        SkipAttributes();
        continue;
      } else if (w == "void") {
        saw_void = true;
      } else if (w == "_Bool" || w == "bool") {
        saw_bool = true;
      } else if (w == "char") {
        saw_char = true;
      } else if (w == "short") {
        ++n_short;
      } else if (w == "int") {
        saw_int = true;
      } else if (w == "long") {
        ++n_long;
      } else if (w == "signed" || w == "__signed__") {
        ++n_signed;
      } else if (w == "unsigned") {
        ++n_unsigned;
      } else if (w == "float") {
        saw_float = true;
      } else if (w == "double") {
        saw_double = true;
      } else if (w == "struct" || w == "union") {
        if (named || basic_seen()) {
          throw Error(ErrorCode::kSyntaxError, t.location,
                      "two or more data types in declaration specifiers");
        }
        named = ParseRecordSpecifier();
        any = true;
        continue;
      } else if (w == "enum") {
        if (named || basic_seen()) {
          throw Error(ErrorCode::kSyntaxError, t.location,
                      "two or more data types in declaration specifiers");
        }
        named = ParseEnumSpecifier();
        any = true;
        continue;
      } else if (!named && !basic_seen() && !IsCKeyword(w)) {
        TypeRef td = env_.FindTypedef(w);
        if (!td) td = BuiltinTypedef(w, config_);
        if (td) {
          named = td;
        } else if ((Ahead(1).kind == TokenKind::kIdentifier &&
                    !IsCKeyword(Ahead(1).text)) ||
                   Ahead(1).Is("*")) {
          env_.AddDiagnostic({ErrorCode::kUnresolvableType, t.location,
                              "unknown type name '" + w + "'"});
          named = CType::Alias(w, nullptr);
        } else {
          break;
        }
      } else {
        break;
      }
      any = true;
      ++pos_;
    }

    if (named) {
      if (basic_seen()) {
        throw Error(ErrorCode::kSyntaxError, at,
                    "two or more data types in declaration specifiers");
      }
      spec.type = named;
    } else if (saw_void) {
      spec.type = CType::Void();
    } else if (saw_bool) {
      spec.type = CType::Bool();
    } else if (saw_char) {
      spec.type = n_signed     ? CType::SignedInt(8)
                  : n_unsigned ? CType::UnsignedInt(8)
                               : CType::Char();
    } else if (saw_float) {
      spec.type = CType::Float32();
    } else if (saw_double) {
      if (n_long) Unsupported(at, "long double");
      spec.type = CType::Float64();
    } else if (n_short || n_long || saw_int || n_signed || n_unsigned) {
      int width = n_short ? 16 : n_long >= 2 ? 64 : n_long == 1 ? config_.long_width : 32;
      spec.type = n_unsigned ? CType::UnsignedInt(width) : CType::SignedInt(width);
    } else {
      throw Error(ErrorCode::kSyntaxError, at,
                  any ? "type specifier missing"
                      : "expected declaration, found '" + Cur().text + "'");
    }
    if (is_const) spec.type = WithConst(spec.type);
    return spec;
  }

  TypeRef ParseRecordSpecifier() {
    const Token& keyword = Cur();
    TypeKind kind = keyword.text == "struct" ? TypeKind::kStruct : TypeKind::kUnion;
    ++pos_;
    SkipAttributes();
    std::string tag;
    if (IsPlainIdentifier(Cur())) {
      tag = Cur().text;
      ++pos_;
    }
    SkipAttributes();
    if (!Accept("{")) {
      if (tag.empty()) {
        throw Error(ErrorCode::kSyntaxError, Cur().location,
                    "expected tag or '{' after " + keyword.text);
      }
      if (TypeRef def = env_.FindTag(kind, tag)) return def;
      return CType::TagReference(kind, tag);
    }
    std::vector<Field> fields;
    std::set<std::string> names;
    while (!Accept("}")) {
      if (AtEnd()) Expect("}");
      SourceLocation member_at = Cur().location;
      DeclSpec fs = ParseDeclSpecifiers(/*allow_storage=*/false);
      if (Cur().Is(";")) {
        ++pos_;
        if (fs.type->IsRecord() && fs.type->name.empty()) {
          Unsupported(member_at, "anonymous inner struct/union");
        }
        continue;
      }
      for (;;) {
        DeclaratorResult d = ParseDeclarator(fs.type, /*abstract_ok=*/false);
        if (d.is_function) {
          throw Error(ErrorCode::kSyntaxError, d.location,
                      "member '" + d.name + "' declared as a function");
        }
        if (Cur().Is(":")) Unsupported(Cur().location, "bitfield");
        if (d.outer_unsized) Unsupported(d.location, "flexible array member");
        if (!names.insert(d.name).second) {
          throw Error(ErrorCode::kSyntaxError, d.location,
                      "duplicate member '" + d.name + "'");
        }
        fields.push_back({d.name, d.type});
        SkipAttributes();
        if (Accept(",")) continue;
        Expect(";");
        break;
      }
    }
    SkipAttributes();
    if (fields.empty()) Unsupported(keyword.location, "empty " + keyword.text);
    TypeRef record = kind == TypeKind::kStruct
                         ? CType::Struct(tag, std::move(fields))
                         : CType::Union(tag, std::move(fields));
    if (!tag.empty()) env_.AddTag(record);
    return record;
  }

  TypeRef ParseEnumSpecifier() {
    SourceLocation at = Cur().location;
    ++pos_;
    SkipAttributes();
    std::string tag;
    if (IsPlainIdentifier(Cur())) {
      tag = Cur().text;
      ++pos_;
    }
    if (!Accept("{")) {
      if (tag.empty()) {
        throw Error(ErrorCode::kSyntaxError, Cur().location,
                    "expected tag or '{' after enum");
      }
      if (TypeRef def = env_.FindTag(TypeKind::kEnum, tag)) return def;
      return CType::TagReference(TypeKind::kEnum, tag);
    }
    std::vector<Enumerator> values;
    std::int64_t next = 0;
    while (!Accept("}")) {
      if (!IsPlainIdentifier(Cur())) {
        throw Error(ErrorCode::kSyntaxError, Cur().location,
                    "expected enumerator name");
      }
      std::string name = Cur().text;
      ++pos_;
      if (Accept("=")) next = ParseConstant(/*array_bound=*/false);
      values.push_back({name, next});
      env_.AddEnumConstant(name, next);
      ++next;
      if (!Accept(",")) {
        Expect("}");
        break;
      }
    }
    if (values.empty()) {
      throw Error(ErrorCode::kSyntaxError, at, "empty enum");
    }
    TypeRef e = CType::Enum(tag, std::move(values));
    if (!tag.empty()) env_.AddTag(e);
    return e;
  }

  DeclaratorResult ParseDeclarator(TypeRef base, bool abstract_ok) {
    while (Accept("*")) {
      base = CType::Pointer(base);
      while (Cur().kind == TokenKind::kIdentifier) {
        const std::string& w = Cur().text;
        if (w == "const" || w == "__const") {
          base = WithConst(base);
        } else if (w == "_Atomic") {
          Unsupported(Cur().location, "_Atomic");
        } else if (!(w == "volatile" || w == "restrict" || w == "__restrict" ||
                     w == "__restrict__")) {
          break;
        }
        ++pos_;
      }
      SkipAttributes();
    }

    if (Cur().Is("(") && (Ahead(1).Is("*") || Ahead(1).Is("("))) {
      std::size_t open = pos_;
      std::size_t close = MatchingClose(open, "(", ")");
      pos_ = close + 1;
      if (Cur().Is("(")) Unsupported(tokens_[open].location, "function pointer");
      bool unsized = false;
      TypeRef grouped = ParseArraySuffixes(base, /*allow_unsized=*/false, &unsized);
      std::size_t after = pos_;
      pos_ = open + 1;
      DeclaratorResult inner = ParseDeclarator(grouped, abstract_ok);
      if (pos_ != close) Expect(")");
      pos_ = after;
      return inner;
    }

    DeclaratorResult r;
    r.location = Cur().location;
    if (IsPlainIdentifier(Cur())) {
      r.name = Cur().text;
      ++pos_;
    } else if (!abstract_ok) {
      throw Error(ErrorCode::kSyntaxError, Cur().location,
                  "expected identifier before '" + Cur().text + "'");
    }
    SkipAttributes();
    if (Cur().Is("(")) {
      r.params = ParseParams();
      if (Cur().Is("(") || Cur().Is("[")) {
        Unsupported(Cur().location, "function returning function or array");
      }
      r.is_function = true;
      r.type = base;
      if (base->kind == TypeKind::kArray) {
        Unsupported(r.location, "function returning array");
      }
      return r;
    }
    r.type = ParseArraySuffixes(base, /*allow_unsized=*/true, &r.outer_unsized);
    return r;
  }

  TypeRef ParseArraySuffixes(TypeRef base, bool allow_unsized, bool* unsized) {
    std::vector<std::optional<std::uint64_t>> dims;
    while (Cur().Is("[")) {
      SourceLocation at = Cur().location;
      ++pos_;
      while (Cur().Is("static") || Cur().Is("const") || Cur().Is("restrict")) ++pos_;
      if (Accept("]")) {
        if (!dims.empty() || !allow_unsized) {
          Unsupported(at, "array of unknown bound");
        }
        dims.push_back(std::nullopt);
        continue;
      }
      std::int64_t n = ParseConstant(/*array_bound=*/true);
      if (n <= 0) Unsupported(at, "array length must be positive");
      dims.push_back(static_cast<std::uint64_t>(n));
      Expect("]");
    }
    TypeRef type = base;
    for (std::size_t i = dims.size(); i-- > 0;) {
      if (!dims[i]) {
        *unsized = true;
        type = CType::Array(type, 0);
      } else {
        type = CType::Array(type, *dims[i]);
      }
    }
    return type;
  }

  std::vector<Param> ParseParams() {
    Expect("(");
    std::vector<Param> params;
    if (Accept(")")) return params;
    if (Cur().Is("void") && Ahead(1).Is(")")) {
      pos_ += 2;
      return params;
    }
    for (std::size_t i = 0;; ++i) {
      if (Cur().Is("...")) Unsupported(Cur().location, "variadic function");
      DeclSpec spec = ParseDeclSpecifiers(/*allow_storage=*/false);
      DeclaratorResult d = ParseDeclarator(spec.type, /*abstract_ok=*/true);
      if (d.is_function) Unsupported(d.location, "function pointer");
      Param p;
      p.name = d.name.empty() ? "arg" + std::to_string(i) : d.name;
      p.type = d.type;
      if (p.type->kind == TypeKind::kArray) {
        p.array_syntax = true;
        if (!d.outer_unsized) p.pointed_length = p.type->length;
        p.type = CType::Pointer(p.type->target);
      }
      if (p.type->kind == TypeKind::kVoid) {
        throw Error(ErrorCode::kSyntaxError, d.location,
                    "parameter has void type");
      }
      params.push_back(std::move(p));
      if (Accept(",")) continue;
      Expect(")");
      break;
    }
    return params;
  }

  // Integer constant expression up to the first token that cannot continue
  // it. Identifiers must be known enumerators; anything else inside an
  // array bound is a variable-length array.
  std::int64_t ParseConstant(bool array_bound) {
    return ParseConditional(array_bound);
  }

  std::int64_t ParseConditional(bool array_bound) {
    std::int64_t cond = ParseBinary(1, array_bound);
    if (!Accept("?")) return cond;
    std::int64_t a = ParseConditional(array_bound);
    Expect(":");
    std::int64_t b = ParseConditional(array_bound);
    return cond ? a : b;
  }

  std::int64_t ParseBinary(int min_prec, bool array_bound) {
    std::int64_t lhs = ParseUnary(array_bound);
    for (;;) {
      const Token& op = Cur();
      int prec = Precedence(op);
      if (prec < min_prec) return lhs;
      ++pos_;
      std::int64_t rhs = ParseBinary(prec + 1, array_bound);
      const std::string& o = op.text;
      if ((o == "/" || o == "%") && rhs == 0) {
        throw Error(ErrorCode::kSyntaxError, op.location,
                    "division by zero in constant expression");
      }
      if (o == "||") lhs = lhs || rhs;
      else if (o == "&&") lhs = lhs && rhs;
      else if (o == "|") lhs |= rhs;
      else if (o == "^") lhs ^= rhs;
      else if (o == "&") lhs &= rhs;
      else if (o == "==") lhs = lhs == rhs;
      else if (o == "!=") lhs = lhs != rhs;
      else if (o == "<") lhs = lhs < rhs;
      else if (o == ">") lhs = lhs > rhs;
      else if (o == "<=") lhs = lhs <= rhs;
      else if (o == ">=") lhs = lhs >= rhs;
      else if (o == "<<") lhs = static_cast<std::int64_t>(static_cast<std::uint64_t>(lhs) << rhs);
      else if (o == ">>") lhs >>= rhs;
      else if (o == "+") lhs += rhs;
      else if (o == "-") lhs -= rhs;
      else if (o == "*") lhs *= rhs;
      else if (o == "/") lhs /= rhs;
      else lhs %= rhs;
    }
  }

  std::int64_t ParseUnary(bool array_bound) {
    const Token& t = Cur();
    if (t.Is("-")) { ++pos_; return -ParseUnary(array_bound); }
    if (t.Is("+")) { ++pos_; return ParseUnary(array_bound); }
    if (t.Is("~")) { ++pos_; return ~ParseUnary(array_bound); }
    if (t.Is("!")) { ++pos_; return !ParseUnary(array_bound); }
    if (t.Is("(")) {
      ++pos_;
      std::int64_t v = ParseConditional(array_bound);
      Expect(")");
      return v;
    }
    if (t.kind == TokenKind::kInteger) {
      ++pos_;
      return ParseIntegerLiteral(t);
    }
    if (t.kind == TokenKind::kChar) {
      ++pos_;
      return ParseCharLiteral(t);
    }
    if (t.kind == TokenKind::kIdentifier) {
      if (auto v = env_.FindEnumConstant(t.text)) {
        ++pos_;
        return *v;
      }
      if (array_bound) Unsupported(t.location, "variable length array");
    }
    throw Error(ErrorCode::kSyntaxError, t.location,
                "expected integer constant expression before '" + t.text + "'");
  }

  ParseConfig config_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  TypeEnvironment env_;
};

}  // namespace

TypeRef BuiltinTypedef(std::string_view name, const ParseConfig& config) {
  if (!config.predefine_stdint) return nullptr;
  struct Builtin {
    std::string_view name;
    bool is_signed;
    int width;  // 0: pointer width
  };
  static constexpr Builtin kBuiltins[] = {
      {"int8_t", true, 8},      {"uint8_t", false, 8},
      {"int16_t", true, 16},    {"uint16_t", false, 16},
      {"int32_t", true, 32},    {"uint32_t", false, 32},
      {"int64_t", true, 64},    {"uint64_t", false, 64},
      {"size_t", false, 0},     {"ssize_t", true, 0},
      {"ptrdiff_t", true, 0},   {"intptr_t", true, 0},
      {"uintptr_t", false, 0},
  };
  for (const Builtin& b : kBuiltins) {
    if (b.name != name) continue;
    int width = b.width ? b.width : config.long_width;
    TypeRef target = b.is_signed ? CType::SignedInt(width) : CType::UnsignedInt(width);
    CType alias = *CType::Alias(std::string(name), target);
    alias.builtin_alias = true;
    return std::make_shared<const CType>(std::move(alias));
  }
  return nullptr;
}

TypeEnvironment ParseDeclarations(std::string_view source,
                                  const ParseConfig& config) {
  return Parser(source, config).Run();
}

}  // namespace motif::c_model
