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

#ifndef MOTIF_DRIVER_SYNTH_DRIVER_SYNTH_H_
#define MOTIF_DRIVER_SYNTH_DRIVER_SYNTH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "motif/c_model/layout.h"
#include "motif/c_model/types.h"

namespace motif::driver_synth {

// Header every generated driver includes. It declares:
//
//   void load_file(const char *path, size_t needed_bytes);
//   void get_value(void *dst, size_t n);
//   void seek_data_index(size_t i);
//   int compare_value(const void *a, const void *b, size_t n);  /* 0 or 1 */
//   void motif_checkpoint(const char *token);
//   void motif_log_to_stderr(void);
//   void safe_abort(void);
//   void printf_struct(const char *label, const void *p, size_t n);
//
// and is provided by the runtime library linked into each driver.
inline constexpr std::string_view kRuntimeHeader = "motif_runtime.h";

enum class CheckpointChannel { kFile, kStderr };

struct DriverSpec {
  c_model::FunctionSignature signature;
  c_model::TypeEnvironment env;
  c_model::AbiProfile abi = c_model::AbiProfile::Lp64();
  std::uint64_t array_default_length = 100;
  // Pointed element counts by parameter name.
  std::map<std::string, std::uint64_t> pointer_lengths;
  // C statements run before each call of the function under test.
  std::optional<std::string> setup_snippet;
  CheckpointChannel checkpoint_channel = CheckpointChannel::kFile;
  // Parameters left out of the output comparison.
  std::set<std::string> excluded;
};

enum class DriverKind { kFuzzing, kFalsePositive, kTest };

std::string_view DriverKindName(DriverKind kind);

// Where one parameter's bytes sit in an input file.
struct InputSlot {
  std::string name;
  std::uint64_t offset = 0;
  std::uint64_t size = 0;
  std::uint64_t count = 1;  // pointed elements; 1 for value params
  bool pointer = false;

  friend bool operator==(const InputSlot&, const InputSlot&) = default;
};

struct GeneratedDriver {
  DriverKind kind = DriverKind::kFuzzing;
  std::string source;
  std::uint64_t consumed_input_bytes = 0;
  std::vector<InputSlot> slots;
};

// Input layout shared by all three drivers. Throws UnsupportedSignature
// for pointer-to-pointer or pointer returns, void pointees without a
// configured length, and types that cannot be laid out.
std::vector<InputSlot> InputLayout(const DriverSpec& spec);

GeneratedDriver GenerateFuzzingDriver(const DriverSpec& spec);
GeneratedDriver GenerateFalsePositiveDriver(const DriverSpec& spec);
GeneratedDriver GenerateTestDriver(const DriverSpec& spec);

}  // namespace motif::driver_synth

#endif  // MOTIF_DRIVER_SYNTH_DRIVER_SYNTH_H_
