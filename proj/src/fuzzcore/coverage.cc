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

#include "motif/fuzzcore/coverage.h"

namespace motif::fuzzcore {
namespace {

std::uint8_t Bit(Bucket b) { return static_cast<std::uint8_t>(1u << (static_cast<int>(b) - 1)); }

}  // namespace

Bucket Bucketize(std::uint64_t count) {
  if (count == 0) return Bucket::kNone;
  if (count == 1) return Bucket::k1;
  if (count == 2) return Bucket::k2;
  if (count == 3) return Bucket::k3;
  if (count <= 7) return Bucket::k4To7;
  if (count <= 15) return Bucket::k8To15;
  if (count <= 31) return Bucket::k16To31;
  if (count <= 127) return Bucket::k32To127;
  return Bucket::k128Plus;
}

std::string_view BucketName(Bucket bucket) {
  switch (bucket) {
    case Bucket::kNone: return "∅";
    case Bucket::k1: return "1";
    case Bucket::k2: return "2";
    case Bucket::k3: return "3";
    case Bucket::k4To7: return "4-7";
    case Bucket::k8To15: return "8-15";
    case Bucket::k16To31: return "16-31";
    case Bucket::k32To127: return "32-127";
    case Bucket::k128Plus: return "128+";
  }
  return "?";
}

BucketSignature Signature(std::span<const std::uint8_t> trace) {
  BucketSignature out;
  for (std::size_t i = 0; i < trace.size() && i < kMapSize; ++i) {
    if (trace[i] != 0) out.emplace_back(static_cast<std::uint16_t>(i), Bucketize(trace[i]));
  }
  return out;
}

VirginMap::VirginMap() : seen_(kMapSize, 0) {}

bool VirginMap::IsInteresting(std::span<const std::uint8_t> trace) const {
  for (std::size_t i = 0; i < trace.size() && i < kMapSize; ++i) {
    if (trace[i] != 0 && !(seen_[i] & Bit(Bucketize(trace[i])))) return true;
  }
  return false;
}

bool VirginMap::IsInteresting(const BucketSignature& signature) const {
  for (auto [edge, bucket] : signature) {
    if (!(seen_[edge] & Bit(bucket))) return true;
  }
  return false;
}

std::size_t VirginMap::Mark(const BucketSignature& signature) {
  std::size_t added = 0;
  for (auto [edge, bucket] : signature) {
    if (bucket == Bucket::kNone || (seen_[edge] & Bit(bucket))) continue;
    seen_[edge] |= Bit(bucket);
    ++added;
  }
  marked_ += added;
  return added;
}

bool VirginMap::Contains(std::uint16_t edge, Bucket bucket) const {
  return bucket != Bucket::kNone && (seen_[edge] & Bit(bucket)) != 0;
}

}  // namespace motif::fuzzcore
