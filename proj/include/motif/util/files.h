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

#ifndef MOTIF_UTIL_FILES_H_
#define MOTIF_UTIL_FILES_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motif {

using Bytes = std::vector<std::uint8_t>;

// All of these throw Error(kIo) on failure.
Bytes ReadFileBytes(const std::filesystem::path& path);
std::string ReadFileText(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes);
void WriteFileText(const std::filesystem::path& path, std::string_view text);

// Appends `line` plus a newline with a single O_APPEND write, so
// concurrent appenders never interleave within a record.
void AppendLine(const std::filesystem::path& path, std::string_view line);

std::uint64_t Fnv1a64(std::span<const std::uint8_t> bytes,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t Fnv1a64(std::string_view text,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string HexDigest(std::uint64_t value);

}  // namespace motif

#endif  // MOTIF_UTIL_FILES_H_
