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

#ifndef MOTIF_ERROR_H_
#define MOTIF_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace motif {

enum class ErrorCode {
  kSyntaxError,
  kUnsupportedConstruct,
  kUnresolvableType,
  kMalformedProbeOutput,
  kParseFailure,
  kCompilerUnavailable,
  kUnsupportedSignature,
  kUnsupportedType,
  kSpawnFailure,
  kNoSeeds,
  kInvalidConfig,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// A position in a source text. Lines and columns are 1-based.
struct SourceLocation {
  std::size_t offset = 0;
  int line = 0;
  int column = 0;

  std::string ToString() const;
};

// All recoverable failures raised by the library carry one of the codes
// above. Callers that need per-item diagnostics catch Error and record it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message);
  Error(ErrorCode code, SourceLocation location, std::string message);

  ErrorCode code() const { return code_; }
  const SourceLocation& location() const { return location_; }
  bool has_location() const { return has_location_; }

 private:
  ErrorCode code_;
  SourceLocation location_;
  bool has_location_ = false;
};

}  // namespace motif

#endif  // MOTIF_ERROR_H_
