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

#ifndef MOTIF_CAMPAIGN_FISHER_H_
#define MOTIF_CAMPAIGN_FISHER_H_

#include <cstdint>

namespace motif::campaign {

// Two-sided Fisher exact test on the 2x2 table
//
//   a b
//   c d
//
// summing the hypergeometric probabilities of every table with the same
// margins whose probability does not exceed the observed one.
double FisherExact(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

}  // namespace motif::campaign

#endif  // MOTIF_CAMPAIGN_FISHER_H_
