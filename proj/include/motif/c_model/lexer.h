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

#ifndef MOTIF_C_MODEL_LEXER_H_
#define MOTIF_C_MODEL_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "motif/error.h"

namespace motif::c_model {

enum class TokenKind {
  kIdentifier,
  kInteger,
  kFloating,
  kString,
  kChar,
  kPunct,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourceLocation location;

  // Byte offset one past the last character of the token.
  std::size_t end() const { return location.offset + text.size(); }
  bool Is(std::string_view s) const {
    return (kind == TokenKind::kPunct || kind == TokenKind::kIdentifier) &&
           text == s;
  }
};

struct LexOptions {
  // Drop lines whose first non-blank character is '#', including
  // backslash continuations. When false, a directive is a SyntaxError.
  bool skip_directives = true;
};

// Splits C source into tokens. Comments and whitespace are dropped; string
// and character literals are kept as single tokens so that operators
// inside them are never seen by later passes. The returned vector always
// ends with a kEnd token.
std::vector<Token> Tokenize(std::string_view source, const LexOptions& options = {});

bool IsCKeyword(std::string_view word);

}  // namespace motif::c_model

#endif  // MOTIF_C_MODEL_LEXER_H_
