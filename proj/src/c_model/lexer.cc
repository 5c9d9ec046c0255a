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

#include "motif/c_model/lexer.h"

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace motif::c_model {
namespace {

constexpr std::array<std::string_view, 3> kThreeCharPuncts = {"<<=", ">>=",
                                                              "..."};
constexpr std::array<std::string_view, 19> kTwoCharPuncts = {
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&",
    "||", "*=", "/=", "%=", "+=", "-=", "&=", "^=", "|="};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view source, const LexOptions& options)
      : src_(source), options_(options) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    bool at_line_start = true;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        Advance();
        at_line_start = true;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
        continue;
      }
      if (c == '/' && Peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
        continue;
      }
      if (c == '/' && Peek(1) == '*') {
        SourceLocation start = Here();
        Advance(2);
        while (pos_ < src_.size() && !(src_[pos_] == '*' && Peek(1) == '/')) {
          Advance();
        }
        if (pos_ >= src_.size()) {
          throw Error(ErrorCode::kSyntaxError, start, "unterminated comment");
        }
        Advance(2);
        continue;
      }
      if (c == '#' && at_line_start) {
        if (!options_.skip_directives) {
          throw Error(ErrorCode::kSyntaxError, Here(),
                      "preprocessor directive in preprocessed input");
        }
        SkipDirective();
        continue;
      }
      at_line_start = false;
      tokens.push_back(Next());
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.location = Here();
    tokens.push_back(end);
    return tokens;
  }

 private:
  char Peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  SourceLocation Here() const { return {pos_, line_, column_}; }

  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void SkipDirective() {
    while (pos_ < src_.size()) {
      if (src_[pos_] == '\\' && Peek(1) == '\n') {
        Advance(2);
        continue;
      }
      if (src_[pos_] == '\n') return;
      Advance();
    }
  }

  Token Make(TokenKind kind, SourceLocation start) {
    Token t;
    t.kind = kind;
    t.location = start;
    t.text = std::string(src_.substr(start.offset, pos_ - start.offset));
    return t;
  }

  Token Next() {
    SourceLocation start = Here();
    char c = src_[pos_];
    if (IsIdentStart(c)) {
      // Wide and unicode prefixes on literals.
      if ((c == 'L' || c == 'u' || c == 'U') && (Peek(1) == '\'' || Peek(1) == '"')) {
        Advance();
        return Quoted(start, src_[pos_]);
      }
      while (pos_ < src_.size() && IsIdentChar(src_[pos_])) Advance();
      return Make(TokenKind::kIdentifier, start);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(Peek(1))))) {
      return Number(start);
    }
    if (c == '"' || c == '\'') return Quoted(start, c);
    for (std::string_view p : kThreeCharPuncts) {
      if (src_.substr(pos_, 3) == p) {
        Advance(3);
        return Make(TokenKind::kPunct, start);
      }
    }
    for (std::string_view p : kTwoCharPuncts) {
      if (src_.substr(pos_, 2) == p) {
        Advance(2);
        return Make(TokenKind::kPunct, start);
      }
    }
    static constexpr std::string_view kSingle = "{}[]()<>;:,.?!~+-*/%&|^=";
    if (kSingle.find(c) == std::string_view::npos) {
      throw Error(ErrorCode::kSyntaxError, start,
                  std::string("unexpected character '") + c + "'");
    }
    Advance();
    return Make(TokenKind::kPunct, start);
  }

  Token Number(SourceLocation start) {
    bool floating = false;
    bool hex = src_[pos_] == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
    if (hex) Advance(2);
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '.') {
        if (c == '.') floating = true;
        if (!hex && (c == 'e' || c == 'E')) {
          floating = true;
          if (Peek(1) == '+' || Peek(1) == '-') Advance();
        }
        if (hex && (c == 'p' || c == 'P')) {
          floating = true;
          if (Peek(1) == '+' || Peek(1) == '-') Advance();
        }
        Advance();
        continue;
      }
      break;
    }
    return Make(floating ? TokenKind::kFloating : TokenKind::kInteger, start);
  }

  Token Quoted(SourceLocation start, char quote) {
    Advance();
    while (pos_ < src_.size() && src_[pos_] != quote) {
      if (src_[pos_] == '\\') Advance();
      if (src_[pos_] == '\n') {
        throw Error(ErrorCode::kSyntaxError, start, "unterminated literal");
      }
      Advance();
    }
    if (pos_ >= src_.size()) {
      throw Error(ErrorCode::kSyntaxError, start, "unterminated literal");
    }
    Advance();
    return Make(quote == '"' ? TokenKind::kString : TokenKind::kChar, start);
  }

  std::string_view src_;
  LexOptions options_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view source, const LexOptions& options) {
  return Lexer(source, options).Run();
}

bool IsCKeyword(std::string_view word) {
  static constexpr std::array<std::string_view, 44> kKeywords = {
      "auto",     "break",    "case",     "char",         "const",
      "continue", "default",  "do",       "double",       "else",
      "enum",     "extern",   "float",    "for",          "goto",
      "if",       "inline",   "int",      "long",         "register",
      "restrict", "return",   "short",    "signed",       "sizeof",
      "static",   "struct",   "switch",   "typedef",      "union",
      "unsigned", "void",     "volatile", "while",        "_Bool",
      "_Atomic",  "_Alignas", "_Alignof", "_Static_assert", "_Noreturn",
      "_Thread_local", "bool", "_Generic", "__attribute__"};
  for (std::string_view k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

}  // namespace motif::c_model
