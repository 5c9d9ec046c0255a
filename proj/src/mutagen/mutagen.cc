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

#include "motif/mutagen/mutagen.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "motif/c_model/lexer.h"
#include "motif/c_model/parser.h"
#include "motif/error.h"

namespace motif::mutagen {

using c_model::FunctionDefinition;
using c_model::Token;
using c_model::TokenKind;
using c_model::TypeEnvironment;
using c_model::TypeKind;
using c_model::TypeRef;

std::string_view OperatorName(Operator op) {
  switch (op) {
    case Operator::kAor: return "AOR";
    case Operator::kRor: return "ROR";
    case Operator::kLcr: return "LCR";
    case Operator::kBwr: return "BWR";
    case Operator::kUoi: return "UOI";
    case Operator::kIcr: return "ICR";
    case Operator::kSdl: return "SDL";
  }
  return "?";
}

std::optional<Operator> ParseOperator(std::string_view name) {
  for (Operator op : AllOperators()) {
    if (OperatorName(op) == name) return op;
  }
  return std::nullopt;
}

OperatorSet AllOperators() {
  return {Operator::kAor, Operator::kRor, Operator::kLcr, Operator::kBwr,
          Operator::kUoi, Operator::kIcr, Operator::kSdl};
}

std::string_view SiteKindName(SiteKind kind) {
  switch (kind) {
    case SiteKind::kBinaryArith: return "binary-arith";
    case SiteKind::kRelational: return "relational";
    case SiteKind::kLogical: return "logical";
    case SiteKind::kBitwise: return "bitwise";
    case SiteKind::kUnaryInsert: return "unary-insert";
    case SiteKind::kConstant: return "constant";
    case SiteKind::kStatement: return "statement";
  }
  return "?";
}

Operator OperatorForSite(SiteKind kind) {
  switch (kind) {
    case SiteKind::kBinaryArith: return Operator::kAor;
    case SiteKind::kRelational: return Operator::kRor;
    case SiteKind::kLogical: return Operator::kLcr;
    case SiteKind::kBitwise: return Operator::kBwr;
    case SiteKind::kUnaryInsert: return Operator::kUoi;
    case SiteKind::kConstant: return Operator::kIcr;
    case SiteKind::kStatement: return Operator::kSdl;
  }
  return Operator::kAor;
}

std::string_view MutantStatusName(MutantStatus status) {
  switch (status) {
    case MutantStatus::kPending: return "pending";
    case MutantStatus::kKilled: return "killed";
    case MutantStatus::kLive: return "live";
    case MutantStatus::kTceEquivalent: return "tce-equivalent";
    case MutantStatus::kTceDuplicate: return "tce-duplicate";
    case MutantStatus::kStillborn: return "stillborn";
  }
  return "?";
}

namespace {

constexpr std::array<std::string_view, 5> kArith = {"+", "-", "*", "/", "%"};
constexpr std::array<std::string_view, 6> kRelational = {"<", "<=", ">", ">=", "==", "!="};
constexpr std::array<std::string_view, 2> kLogical = {"&&", "||"};
constexpr std::array<std::string_view, 3> kBitwise = {"&", "|", "^"};
constexpr std::array<std::string_view, 11> kAssignments = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="};

template <std::size_t N>
bool OneOf(const std::array<std::string_view, N>& set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

template <std::size_t N>
std::vector<std::string> Others(const std::array<std::string_view, N>& set,
                                std::string_view original) {
  std::vector<std::string> out;
  for (std::string_view s : set) {
    if (s != original) out.emplace_back(s);
  }
  return out;
}

bool IsTypeKeyword(std::string_view w) {
  static const std::set<std::string_view> kWords = {
      "void", "char", "short", "int", "long", "float", "double", "signed",
      "unsigned", "_Bool", "struct", "union", "enum", "const", "volatile",
      "static", "register", "auto", "extern", "typedef", "inline", "restrict"};
  return kWords.count(w) > 0;
}

// Walks one function body, recording declarations and expression
// statements.
class BodyScanner {
 public:
  BodyScanner(const std::vector<Token>& tokens, std::size_t lo, std::size_t hi,
              const TypeEnvironment& env)
      : t_(tokens), lo_(lo), hi_(hi), env_(env) {}

  void Run() {
    std::size_t i = lo_ + 1;
    while (i + 1 < hi_) i = Statement(i);
  }

  bool IsTypeWord(std::size_t i) const {
    const Token& tok = t_[i];
    if (tok.kind != TokenKind::kIdentifier) return false;
    if (IsTypeKeyword(tok.text)) return true;
    return TypedefOf(tok.text) != nullptr;
  }

  TypeRef TypedefOf(std::string_view name) const {
    if (TypeRef t = env_.FindTypedef(name)) return t;
    return c_model::BuiltinTypedef(name);
  }

  // Operand-end rule: a `+`, `-`, `*` or `&` after token `i` is binary.
  bool EndsOperand(std::size_t i) const {
    if (i <= lo_) return false;
    const Token& tok = t_[i];
    switch (tok.kind) {
      case TokenKind::kInteger:
      case TokenKind::kFloating:
      case TokenKind::kString:
      case TokenKind::kChar:
        return true;
      case TokenKind::kIdentifier:
        return !c_model::IsCKeyword(tok.text) && TypedefOf(tok.text) == nullptr;
      default:
        break;
    }
    if (tok.text == "]") return true;
    if (tok.text == "++" || tok.text == "--") return EndsOperand(i - 1);
    if (tok.text == ")") {
      std::size_t open = MatchBackward(i);
      if (open == i) return true;
      bool all_types = open + 1 < i;
      for (std::size_t k = open + 1; k < i && all_types; ++k) {
        all_types = IsTypeWord(k) || t_[k].text == "*";
      }
      bool after_sizeof = open > lo_ && t_[open - 1].text == "sizeof";
      return !all_types || after_sizeof;
    }
    return false;
  }

  struct Scalar {
    bool floating = false;
  };

  const std::map<std::string, Scalar>& locals() const { return locals_; }
  const std::set<std::size_t>& declarator_names() const { return declarator_names_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& statements() const {
    return statements_;
  }
  bool InDeclaredBound(std::size_t i) const {
    for (auto [a, b] : bounds_) {
      if (i > a && i < b) return true;
    }
    return false;
  }

  // Classifies a resolved parameter or local type.
  std::optional<Scalar> ScalarOf(const TypeRef& type) const {
    if (!type || !env_.IsResolvable(type)) return std::nullopt;
    TypeRef r = env_.Resolve(type);
    switch (r->kind) {
      case TypeKind::kBool:
      case TypeKind::kChar:
      case TypeKind::kSignedInt:
      case TypeKind::kUnsignedInt:
      case TypeKind::kEnum:
        return Scalar{};
      case TypeKind::kFloat32:
      case TypeKind::kFloat64:
        return Scalar{true};
      default:
        return std::nullopt;
    }
  }

 private:
  std::size_t MatchForward(std::size_t i) const {
    int depth = 0;
    for (std::size_t k = i; k < hi_; ++k) {
      const std::string& s = t_[k].text;
      if (t_[k].kind != TokenKind::kPunct) continue;
      if (s == "(" || s == "[" || s == "{") ++depth;
      if (s == ")" || s == "]" || s == "}") {
        if (--depth == 0) return k;
      }
    }
    return hi_ - 1;
  }

  std::size_t MatchBackward(std::size_t i) const {
    int depth = 0;
    for (std::size_t k = i + 1; k-- > lo_;) {
      const std::string& s = t_[k].text;
      if (t_[k].kind != TokenKind::kPunct) continue;
      if (s == ")" || s == "]" || s == "}") ++depth;
      if (s == "(" || s == "[" || s == "{") {
        if (--depth == 0) return k;
      }
    }
    return i;
  }

  // Index of the `;` ending the construct at `i`, or the closing brace of
  // the enclosing block when none exists.
  std::size_t SkipToSemicolon(std::size_t i) const {
    for (std::size_t k = i; k + 1 < hi_; ++k) {
      const std::string& s = t_[k].text;
      if (t_[k].kind != TokenKind::kPunct) continue;
      if (s == ";") return k;
      if (s == "(" || s == "[" || s == "{") {
        k = MatchForward(k);
        continue;
      }
      if (s == "}" || s == ")" || s == "]") return k;
    }
    return hi_ - 1;
  }

  std::size_t SkipParens(std::size_t i) const {
    if (i + 1 < hi_ && t_[i].text == "(") return MatchForward(i) + 1;
    return i;
  }

  std::size_t Statement(std::size_t i) {
    if (i + 1 >= hi_) return hi_;
    const Token& tok = t_[i];
    const std::string& s = tok.text;
    if (tok.kind == TokenKind::kPunct) {
      if (s == "{") {
        std::size_t close = MatchForward(i);
        std::size_t k = i + 1;
        while (k < close) k = std::min(Statement(k), close);
        return close + 1;
      }
      if (s == ";" || s == "}") return i + 1;
    }
    if (tok.kind == TokenKind::kIdentifier) {
      if (s == "if") {
        std::size_t k = Statement(SkipParens(i + 1));
        if (k + 1 < hi_ && t_[k].text == "else") k = Statement(k + 1);
        return k;
      }
      if (s == "while" || s == "switch") return Statement(SkipParens(i + 1));
      if (s == "for") {
        if (i + 2 < hi_ && t_[i + 1].text == "(" && IsTypeWord(i + 2)) {
          Declaration(i + 2);
        }
        return Statement(SkipParens(i + 1));
      }
      if (s == "do") {
        std::size_t k = Statement(i + 1);
        return SkipToSemicolon(k) + 1;
      }
      if (s == "case" || s == "default") {
        int pending = 0;
        for (std::size_t k = i + 1; k + 1 < hi_; ++k) {
          if (t_[k].text == "?") ++pending;
          if (t_[k].text == ":" && pending-- == 0) return Statement(k + 1);
        }
        return hi_;
      }
      if (s == "return" || s == "break" || s == "continue" || s == "goto") {
        return SkipToSemicolon(i) + 1;
      }
      if (!c_model::IsCKeyword(s) && t_[i + 1].text == ":") {
        return Statement(i + 2);
      }
      if (IsTypeWord(i)) return Declaration(i) + 1;
    }
    std::size_t end = SkipToSemicolon(i);
    if (t_[end].text == ";") statements_.emplace_back(i, end);
    return end + 1;
  }

  // Records the scalar names a declaration introduces; returns the index
  // of its terminating `;`.
  std::size_t Declaration(std::size_t i) {
    std::size_t end = SkipToSemicolon(i);
    std::size_t k = i;
    bool floating = false;
    bool record = false;
    bool has_void = false;
    TypeRef named;
    while (k < end && IsTypeWord(k)) {
      const std::string& w = t_[k].text;
      if (w == "float" || w == "double") floating = true;
      if (w == "void") has_void = true;
      if (w == "struct" || w == "union") record = true;
      if (w == "struct" || w == "union" || w == "enum") {
        ++k;
        if (k < end && t_[k].kind == TokenKind::kIdentifier) ++k;
        if (k < end && t_[k].text == "{") k = MatchForward(k) + 1;
        continue;
      }
      if (!IsTypeKeyword(w)) named = TypedefOf(w);
      ++k;
    }
    std::optional<Scalar> base;
    if (named) {
      base = ScalarOf(named);
    } else if (!record && !has_void) {
      base = Scalar{floating};
    }
    while (k < end) {
      int stars = 0;
      while (k < end && (t_[k].text == "*" || t_[k].text == "const")) {
        if (t_[k].text == "*") ++stars;
        ++k;
      }
      if (k >= end || t_[k].kind != TokenKind::kIdentifier) break;
      std::size_t name = k++;
      declarator_names_.insert(name);
      bool array = false;
      while (k < end && t_[k].text == "[") {
        array = true;
        std::size_t close = MatchForward(k);
        bounds_.emplace_back(k, close);
        k = close + 1;
      }
      if (base && stars == 0 && !array) locals_[t_[name].text] = *base;
      while (k < end && t_[k].text != ",") {
        if (t_[k].text == "(" || t_[k].text == "{" || t_[k].text == "[") {
          k = MatchForward(k);
        }
        ++k;
      }
      if (k < end) ++k;
    }
    return end;
  }

  const std::vector<Token>& t_;
  std::size_t lo_;
  std::size_t hi_;
  const TypeEnvironment& env_;
  std::map<std::string, Scalar> locals_;
  std::set<std::size_t> declarator_names_;
  std::vector<std::pair<std::size_t, std::size_t>> bounds_;
  std::vector<std::pair<std::size_t, std::size_t>> statements_;
};

struct Literal {
  unsigned __int128 value = 0;
  std::string suffix;
};

std::optional<Literal> ParseIntegerLiteral(std::string_view text) {
  std::size_t n = text.size();
  while (n > 0 && (text[n - 1] == 'u' || text[n - 1] == 'U' ||
                   text[n - 1] == 'l' || text[n - 1] == 'L')) {
    --n;
  }
  std::string digits(text.substr(0, n));
  if (digits.empty()) return std::nullopt;
  int base = 10;
  std::size_t pos = 0;
  if (digits.size() > 1 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    pos = 2;
  } else if (digits.size() > 1 && digits[0] == '0') {
    base = 8;
    pos = 1;
  }
  if (pos >= digits.size()) return std::nullopt;
  unsigned __int128 value = 0;
  for (; pos < digits.size(); ++pos) {
    char c = digits[pos];
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      d = c - 'A' + 10;
    } else {
      return std::nullopt;
    }
    if (d >= base) return std::nullopt;
    value = value * base + d;
    if (value > UINT64_MAX) return std::nullopt;
  }
  return Literal{value, std::string(text.substr(n))};
}

std::string DecimalString(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

std::vector<std::string> ConstantAlternatives(std::string_view text) {
  std::optional<Literal> lit = ParseIntegerLiteral(text);
  if (!lit) return {};
  // Values are kept as (negative, magnitude) pairs.
  std::vector<std::pair<bool, unsigned __int128>> values = {
      {false, 0}, {false, 1}, {true, 1}};
  if (lit->value < UINT64_MAX) values.push_back({false, lit->value + 1});
  if (lit->value == 0) {
    values.push_back({true, 1});
  } else {
    values.push_back({false, lit->value - 1});
  }
  std::vector<std::string> out;
  std::set<std::pair<bool, unsigned __int128>> seen = {{false, lit->value}};
  for (const auto& v : values) {
    if (!seen.insert(v).second) continue;
    std::string digits = DecimalString(v.second) + lit->suffix;
    out.push_back(v.first ? "(-" + digits + ")" : digits);
  }
  return out;
}

}  // namespace

const FunctionDefinition& FindDefinition(const TypeEnvironment& env,
                                         const SourceFile& source,
                                         std::string_view function) {
  if (function.empty()) {
    if (env.definitions().size() != 1) {
      throw Error(ErrorCode::kParseFailure,
                  source.path + ": expected exactly one function definition, found " +
                      std::to_string(env.definitions().size()));
    }
    return env.definitions().front();
  }
  const FunctionDefinition* def = env.FindDefinition(function);
  if (def == nullptr) {
    throw Error(ErrorCode::kParseFailure,
                source.path + ": no definition of function '" + std::string(function) + "'");
  }
  return *def;
}

std::vector<MutationSite> EnumerateSites(const SourceFile& source,
                                         std::string_view function,
                                         const OperatorSet& operators) {
  TypeEnvironment env;
  std::vector<Token> tokens;
  try {
    env = c_model::ParseDeclarations(source.text);
    tokens = c_model::Tokenize(source.text);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseFailure, source.path + ": " + e.what());
  }
  const FunctionDefinition& def = FindDefinition(env, source, function);

  std::size_t lo = 0;
  while (lo < tokens.size() && tokens[lo].location.offset < def.body_begin) ++lo;
  std::size_t hi = lo;
  while (hi < tokens.size() && tokens[hi].kind != TokenKind::kEnd &&
         tokens[hi].location.offset < def.end) {
    ++hi;
  }
  if (lo >= hi || tokens[lo].text != "{" || tokens[hi - 1].text != "}") {
    throw Error(ErrorCode::kParseFailure,
                source.path + ": malformed body of '" + def.signature.name + "'");
  }

  BodyScanner scan(tokens, lo, hi, env);
  scan.Run();

  std::map<std::string, BodyScanner::Scalar> scalars;
  for (const auto& p : def.signature.params) {
    if (auto s = scan.ScalarOf(p.type)) scalars[p.name] = *s;
  }
  for (const auto& [name, s] : scan.locals()) scalars[name] = s;

  std::vector<MutationSite> sites;
  auto add = [&](SiteKind kind, std::size_t begin, std::size_t end, bool floating = false) {
    if (!operators.count(OperatorForSite(kind))) return;
    sites.push_back(MutationSite{source.path, def.signature.name, begin, end, kind,
                                 source.text.substr(begin, end - begin), floating});
  };

  for (std::size_t i = lo + 1; i + 1 < hi; ++i) {
    const Token& tok = tokens[i];
    const std::string& s = tok.text;
    if (tok.kind == TokenKind::kPunct) {
      bool binary = scan.EndsOperand(i - 1);
      if (OneOf(kArith, s) && (s == "/" || s == "%" || binary)) {
        add(SiteKind::kBinaryArith, tok.location.offset, tok.end());
      } else if (OneOf(kRelational, s)) {
        add(SiteKind::kRelational, tok.location.offset, tok.end());
      } else if (OneOf(kLogical, s)) {
        add(SiteKind::kLogical, tok.location.offset, tok.end());
      } else if (OneOf(kBitwise, s) && (s != "&" || binary)) {
        add(SiteKind::kBitwise, tok.location.offset, tok.end());
      }
      continue;
    }
    if (tok.kind == TokenKind::kInteger) {
      if (!scan.InDeclaredBound(i) && !ConstantAlternatives(s).empty()) {
        add(SiteKind::kConstant, tok.location.offset, tok.end());
      }
      continue;
    }
    if (tok.kind != TokenKind::kIdentifier) continue;
    auto it = scalars.find(s);
    if (it == scalars.end() || scan.declarator_names().count(i)) continue;
    const std::string& prev = tokens[i - 1].text;
    const std::string& next = tokens[i + 1].text;
    if (prev == "." || prev == "->" || prev == "++" || prev == "--" ||
        prev == "sizeof" || (prev == "&" && !scan.EndsOperand(i - 2))) {
      continue;
    }
    if (OneOf(kAssignments, next) || next == "++" || next == "--" ||
        next == "[" || next == "(" || next == "." || next == "->") {
      continue;
    }
    add(SiteKind::kUnaryInsert, tok.location.offset, tok.end(), it->second.floating);
  }
  for (auto [first, semi] : scan.statements()) {
    add(SiteKind::kStatement, tokens[first].location.offset, tokens[semi].end());
  }

  std::stable_sort(sites.begin(), sites.end(), [](const MutationSite& a, const MutationSite& b) {
    return std::tie(a.begin, a.kind) < std::tie(b.begin, b.kind);
  });
  return sites;
}

std::vector<std::string> Alternatives(const MutationSite& site) {
  switch (site.kind) {
    case SiteKind::kBinaryArith: return Others(kArith, site.text);
    case SiteKind::kRelational: return Others(kRelational, site.text);
    case SiteKind::kLogical: return Others(kLogical, site.text);
    case SiteKind::kBitwise: return Others(kBitwise, site.text);
    case SiteKind::kUnaryInsert: {
      std::vector<std::string> out = {"(!" + site.text + ")", "(-" + site.text + ")"};
      if (!site.floating) out.push_back("(~" + site.text + ")");
      return out;
    }
    case SiteKind::kConstant: return ConstantAlternatives(site.text);
    case SiteKind::kStatement: return {";"};
  }
  return {};
}

Mutant MakeMutant(const SourceFile& source, const FunctionDefinition& definition,
                  const MutationSite& site, Operator op, std::string replacement, int id) {
  if (site.begin < definition.body_begin || site.end > definition.end || site.begin > site.end) {
    throw Error(ErrorCode::kParseFailure, "mutation site outside the body of '" +
                                              definition.signature.name + "'");
  }
  Mutant m;
  m.id = id;
  m.site = site;
  m.op = op;
  m.original = source.text.substr(site.begin, site.end - site.begin);
  m.replacement = std::move(replacement);
  m.mutated_source = source.text;
  m.mutated_source.replace(site.begin, site.end - site.begin, m.replacement);
  m.mutated_source.insert(definition.name_offset, kMutantPrefix);
  m.name_offset = definition.name_offset;
  m.definition_begin = definition.begin;
  m.definition_end = definition.end + kMutantPrefix.size() + m.replacement.size() -
                     (site.end - site.begin);
  return m;
}

std::vector<Mutant> GenerateMutants(const SourceFile& source,
                                    const std::vector<MutationSite>& sites,
                                    const OperatorSet& operators, int first_id) {
  std::vector<Mutant> out;
  if (sites.empty()) return out;
  TypeEnvironment env = c_model::ParseDeclarations(source.text);
  int id = first_id;
  for (const MutationSite& site : sites) {
    Operator op = OperatorForSite(site.kind);
    if (!operators.count(op)) continue;
    const FunctionDefinition& def = FindDefinition(env, source, site.function);
    for (std::string& alt : Alternatives(site)) {
      out.push_back(MakeMutant(source, def, site, op, std::move(alt), id++));
    }
  }
  return out;
}

std::string EditedSource(const Mutant& mutant) {
  std::string text = mutant.mutated_source;
  text.erase(mutant.name_offset, kMutantPrefix.size());
  return text;
}

std::string MutatedFunction(const Mutant& mutant) {
  return mutant.mutated_source.substr(mutant.definition_begin,
                                      mutant.definition_end - mutant.definition_begin);
}

std::string MutantUnit(const SourceFile& source, const Mutant& mutant) {
  std::string unit = source.text;
  if (!unit.empty() && unit.back() != '\n') unit += '\n';
  unit += "\n";
  unit += MutatedFunction(mutant);
  unit += "\n";
  return unit;
}

std::string MutantFileName(const Mutant& mutant) {
  return mutant.site.function + ".mut" + std::to_string(mutant.id) + "." +
         std::string(OperatorName(mutant.op)) + ".c";
}

}  // namespace motif::mutagen
