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

#ifndef MOTIF_FUZZCORE_COVERAGE_H_
#define MOTIF_FUZZCORE_COVERAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace motif::fuzzcore {

inline constexpr std::size_t kMapSize = 65536;

// Hit-count classes of one edge.
enum class Bucket : std::uint8_t {
  kNone,
  k1,
  k2,
  k3,
  k4To7,
  k8To15,
  k16To31,
  k32To127,
  k128Plus,
};

inline constexpr int kBucketCount = 9;

Bucket Bucketize(std::uint64_t count);
std::string_view BucketName(Bucket bucket);  // "∅", "1", ..., "128+"

// Non-empty (edge, bucket) pairs of one execution, ordered by edge.
using BucketSignature = std::vector<std::pair<std::uint16_t, Bucket>>;

BucketSignature Signature(std::span<const std::uint8_t> trace);

// The (edge, bucket) pairs seen by admitted inputs.
class VirginMap {
 public:
  VirginMap();

  // True iff `trace` reaches a pair not yet marked.
  bool IsInteresting(std::span<const std::uint8_t> trace) const;
  bool IsInteresting(const BucketSignature& signature) const;

  // Marks every pair of `signature`; returns how many were new.
  std::size_t Mark(const BucketSignature& signature);

  bool Contains(std::uint16_t edge, Bucket bucket) const;
  std::size_t marked() const { return marked_; }

 private:
  std::vector<std::uint8_t> seen_;  // bit (bucket - 1) per edge
  std::size_t marked_ = 0;
};

}  // namespace motif::fuzzcore

#endif  // MOTIF_FUZZCORE_COVERAGE_H_
