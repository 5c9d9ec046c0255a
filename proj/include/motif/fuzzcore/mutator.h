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

#ifndef MOTIF_FUZZCORE_MUTATOR_H_
#define MOTIF_FUZZCORE_MUTATOR_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include "motif/util/files.h"

namespace motif::fuzzcore {

using Rng = std::mt19937_64;

enum class Stage {
  kFlip1,
  kFlip2,
  kFlip4,
  kFlipByte1,
  kFlipByte2,
  kFlipByte4,
  kArith8,
  kArith16,
  kArith32,
  kInteresting8,
  kInteresting16,
  kInteresting32,
  kHavoc,
  kSplice,
};

std::string_view StageName(Stage stage);

inline constexpr int kArithMax = 35;

// Single edits. Bits are numbered LSB-first within each byte; multi-byte
// values are little-endian. Edits that do not fit leave the input as is.
void FlipBits(Bytes& data, std::size_t bit, int width);
void FlipBytes(Bytes& data, std::size_t pos, int width);
void AddArith(Bytes& data, std::size_t pos, int width_bytes, int delta);
void SetInteresting(Bytes& data, std::size_t pos, int width_bytes, std::int32_t value);

// -128, -1, 0, 1, 127 and the 16- and 32-bit extremes; each width draws
// from its own list and those of narrower widths.
const std::vector<std::int32_t>& InterestingValues(int width_bytes);

struct MutationLimits {
  // Inputs produced by havoc and splice stay within [1, max_size].
  std::size_t max_size = 1;
};

// One random application of `stage`. Havoc stacks 2 to 128 edits; splice
// crosses `data` with `partner` at a random point, then runs havoc.
Bytes MutateInput(const Bytes& data, Rng& rng, Stage stage, const MutationLimits& limits,
                  const Bytes* partner = nullptr);

// Walks every deterministic stage over `data` (all bit positions, byte
// positions, arithmetic deltas and interesting values), calling `emit`
// with each candidate. Stops early when `emit` returns false.
void DeterministicStages(const Bytes& data,
                         const std::function<bool(Stage, const Bytes&)>& emit);

}  // namespace motif::fuzzcore

#endif  // MOTIF_FUZZCORE_MUTATOR_H_
