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

#include "motif/error.h"

#include <string>
#include <utility>

namespace motif {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::kUnresolvableType: return "UnresolvableType";
    case ErrorCode::kMalformedProbeOutput: return "MalformedProbeOutput";
    case ErrorCode::kParseFailure: return "ParseFailure";
    case ErrorCode::kCompilerUnavailable: return "CompilerUnavailable";
    case ErrorCode::kUnsupportedSignature: return "UnsupportedSignature";
    case ErrorCode::kUnsupportedType: return "UnsupportedType";
    case ErrorCode::kSpawnFailure: return "SpawnFailure";
    case ErrorCode::kNoSeeds: return "NoSeeds";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "IoError";
  }
  return "UnknownError";
}

std::string SourceLocation::ToString() const {
  return std::to_string(line) + ":" + std::to_string(column);
}

Error::Error(ErrorCode code, std::string message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

Error::Error(ErrorCode code, SourceLocation location, std::string message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + " at " +
                         location.ToString() + ": " + message),
      code_(code),
      location_(location),
      has_location_(true) {}

}  // namespace motif
