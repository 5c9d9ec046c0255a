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

#include "motif/fuzzcore/mutator.h"

#include <algorithm>
#include <cstring>
#include <vector>

namespace motif::fuzzcore {

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kFlip1: return "flip1";
    case Stage::kFlip2: return "flip2";
    case Stage::kFlip4: return "flip4";
    case Stage::kFlipByte1: return "flip8";
    case Stage::kFlipByte2: return "flip16";
    case Stage::kFlipByte4: return "flip32";
    case Stage::kArith8: return "arith8";
    case Stage::kArith16: return "arith16";
    case Stage::kArith32: return "arith32";
    case Stage::kInteresting8: return "int8";
    case Stage::kInteresting16: return "int16";
    case Stage::kInteresting32: return "int32";
    case Stage::kHavoc: return "havoc";
    case Stage::kSplice: return "splice";
  }
  return "?";
}

void FlipBits(Bytes& data, std::size_t bit, int width) {
  if (bit + width > data.size() * 8) return;
  for (int i = 0; i < width; ++i) {
    std::size_t b = bit + i;
    data[b / 8] ^= static_cast<std::uint8_t>(1u << (b % 8));
  }
}

void FlipBytes(Bytes& data, std::size_t pos, int width) {
  if (pos + width > data.size()) return;
  for (int i = 0; i < width; ++i) data[pos + i] ^= 0xFF;
}

void AddArith(Bytes& data, std::size_t pos, int width_bytes, int delta) {
  if (pos + width_bytes > data.size()) return;
  std::uint64_t v = 0;
  for (int i = 0; i < width_bytes; ++i) v |= std::uint64_t{data[pos + i]} << (8 * i);
  v += static_cast<std::uint64_t>(static_cast<std::int64_t>(delta));
  for (int i = 0; i < width_bytes; ++i) data[pos + i] = static_cast<std::uint8_t>(v >> (8 * i));
}

void SetInteresting(Bytes& data, std::size_t pos, int width_bytes, std::int32_t value) {
  if (pos + width_bytes > data.size()) return;
  auto v = static_cast<std::uint32_t>(value);
  for (int i = 0; i < width_bytes; ++i) data[pos + i] = static_cast<std::uint8_t>(v >> (8 * i));
}

const std::vector<std::int32_t>& InterestingValues(int width_bytes) {
  static const std::vector<std::int32_t> k8 = {-128, -1, 0, 1, 127};
  static const std::vector<std::int32_t> k16 = {-32768, -128, -1, 0, 1, 127, 32767};
  static const std::vector<std::int32_t> k32 = {INT32_MIN, -32768, -128, -1, 0,
                                                1,         127,    32767, INT32_MAX};
  if (width_bytes == 1) return k8;
  if (width_bytes == 2) return k16;
  return k32;
}

namespace {

std::size_t Below(Rng& rng, std::size_t n) { return n == 0 ? 0 : rng() % n; }

void HavocEdit(Bytes& d, Rng& rng, std::size_t max_size) {
  static const int kWidths[] = {1, 2, 4};
  if (d.empty()) {
    d.push_back(static_cast<std::uint8_t>(rng()));
    return;
  }
  switch (Below(rng, 10)) {
    case 0:
      FlipBits(d, Below(rng, d.size() * 8), 1);
      break;
    case 1: {
      int w = kWidths[Below(rng, 3)];
      if (static_cast<std::size_t>(w) > d.size()) w = 1;
      const auto& values = InterestingValues(w);
      SetInteresting(d, Below(rng, d.size() - w + 1), w, values[Below(rng, values.size())]);
      break;
    }
    case 2:
    case 3: {
      int w = kWidths[Below(rng, 3)];
      if (static_cast<std::size_t>(w) > d.size()) w = 1;
      int delta = 1 + static_cast<int>(Below(rng, kArithMax));
      AddArith(d, Below(rng, d.size() - w + 1), w, Below(rng, 2) ? delta : -delta);
      break;
    }
    case 4:
      d[Below(rng, d.size())] ^= static_cast<std::uint8_t>(1 + Below(rng, 255));
      break;
    case 5:
      d[Below(rng, d.size())] = static_cast<std::uint8_t>(rng());
      break;
    case 6: {
      if (d.size() < 2) break;
      std::size_t len = 1 + Below(rng, std::min<std::size_t>(d.size() - 1, 16));
      std::size_t pos = Below(rng, d.size() - len + 1);
      d.erase(d.begin() + pos, d.begin() + pos + len);
      break;
    }
    case 7: {
      if (d.size() >= max_size) break;
      std::size_t room = max_size - d.size();
      std::size_t len = 1 + Below(rng, std::min<std::size_t>({room, d.size(), 16}));
      std::size_t from = Below(rng, d.size() - len + 1);
      std::size_t to = Below(rng, d.size() + 1);
      Bytes block(d.begin() + from, d.begin() + from + len);
      if (Below(rng, 4) == 0) std::fill(block.begin(), block.end(), static_cast<std::uint8_t>(rng()));
      d.insert(d.begin() + to, block.begin(), block.end());
      break;
    }
    default: {
      if (d.size() < 2) break;
      std::size_t len = 1 + Below(rng, std::min<std::size_t>(d.size() - 1, 16));
      std::size_t from = Below(rng, d.size() - len + 1);
      std::size_t to = Below(rng, d.size() - len + 1);
      std::memmove(d.data() + to, d.data() + from, len);
      break;
    }
  }
}

}  // namespace

Bytes MutateInput(const Bytes& data, Rng& rng, Stage stage, const MutationLimits& limits,
                  const Bytes* partner) {
  Bytes d = data;
  std::size_t max_size = std::max<std::size_t>(1, limits.max_size);
  auto pos_for = [&](int width) -> std::size_t {
    return d.size() >= static_cast<std::size_t>(width) ? Below(rng, d.size() - width + 1) : 0;
  };
  auto delta = [&] {
    int v = 1 + static_cast<int>(Below(rng, kArithMax));
    return Below(rng, 2) ? v : -v;
  };
  switch (stage) {
    case Stage::kFlip1:
    case Stage::kFlip2:
    case Stage::kFlip4: {
      int w = stage == Stage::kFlip1 ? 1 : stage == Stage::kFlip2 ? 2 : 4;
      if (d.size() * 8 >= static_cast<std::size_t>(w)) FlipBits(d, Below(rng, d.size() * 8 - w + 1), w);
      return d;
    }
    case Stage::kFlipByte1: FlipBytes(d, pos_for(1), 1); return d;
    case Stage::kFlipByte2: FlipBytes(d, pos_for(2), 2); return d;
    case Stage::kFlipByte4: FlipBytes(d, pos_for(4), 4); return d;
    case Stage::kArith8: AddArith(d, pos_for(1), 1, delta()); return d;
    case Stage::kArith16: AddArith(d, pos_for(2), 2, delta()); return d;
    case Stage::kArith32: AddArith(d, pos_for(4), 4, delta()); return d;
    case Stage::kInteresting8:
    case Stage::kInteresting16:
    case Stage::kInteresting32: {
      int w = stage == Stage::kInteresting8 ? 1 : stage == Stage::kInteresting16 ? 2 : 4;
      const auto& values = InterestingValues(w);
      SetInteresting(d, pos_for(w), w, values[Below(rng, values.size())]);
      return d;
    }
    case Stage::kSplice:
      if (partner != nullptr && !partner->empty() && !d.empty()) {
        std::size_t cut = 1 + Below(rng, std::min(d.size(), partner->size()));
        d.resize(std::max(cut, std::min(d.size(), partner->size())));
        for (std::size_t i = cut; i < d.size() && i < partner->size(); ++i) d[i] = (*partner)[i];
      }
      [[fallthrough]];
    case Stage::kHavoc: {
      int edits = 1 << (1 + Below(rng, 7));
      for (int i = 0; i < edits; ++i) HavocEdit(d, rng, max_size);
      if (d.size() > max_size) d.resize(max_size);
      if (d.empty()) d.push_back(static_cast<std::uint8_t>(rng()));
      return d;
    }
  }
  return d;
}

void DeterministicStages(const Bytes& data,
                         const std::function<bool(Stage, const Bytes&)>& emit) {
  const std::size_t bits = data.size() * 8;
  const std::pair<Stage, int> flips[] = {{Stage::kFlip1, 1}, {Stage::kFlip2, 2}, {Stage::kFlip4, 4}};
  for (auto [stage, w] : flips) {
    for (std::size_t b = 0; b + w <= bits; ++b) {
      Bytes d = data;
      FlipBits(d, b, w);
      if (!emit(stage, d)) return;
    }
  }
  const std::pair<Stage, int> byte_flips[] = {
      {Stage::kFlipByte1, 1}, {Stage::kFlipByte2, 2}, {Stage::kFlipByte4, 4}};
  for (auto [stage, w] : byte_flips) {
    for (std::size_t p = 0; p + w <= data.size(); ++p) {
      Bytes d = data;
      FlipBytes(d, p, w);
      if (!emit(stage, d)) return;
    }
  }
  const std::pair<Stage, int> arith[] = {{Stage::kArith8, 1}, {Stage::kArith16, 2}, {Stage::kArith32, 4}};
  for (auto [stage, w] : arith) {
    for (std::size_t p = 0; p + w <= data.size(); ++p) {
      for (int delta = 1; delta <= kArithMax; ++delta) {
        for (int sign : {1, -1}) {
          Bytes d = data;
          AddArith(d, p, w, sign * delta);
          if (d != data && !emit(stage, d)) return;
        }
      }
    }
  }
  const std::pair<Stage, int> interesting[] = {
      {Stage::kInteresting8, 1}, {Stage::kInteresting16, 2}, {Stage::kInteresting32, 4}};
  for (auto [stage, w] : interesting) {
    for (std::size_t p = 0; p + w <= data.size(); ++p) {
      for (std::int32_t v : InterestingValues(w)) {
        Bytes d = data;
        SetInteresting(d, p, w, v);
        if (d != data && !emit(stage, d)) return;
      }
    }
  }
}

}  // namespace motif::fuzzcore
