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

#include "motif/campaign/fisher.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace motif::campaign {
namespace {

double LogChoose(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

}  // namespace

double FisherExact(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  const std::uint64_t row1 = a + b;
  const std::uint64_t row2 = c + d;
  const std::uint64_t col1 = a + c;
  const std::uint64_t n = row1 + row2;
  if (n == 0) return 1.0;
  const std::uint64_t lo = col1 > row2 ? col1 - row2 : 0;
  const std::uint64_t hi = std::min(row1, col1);
  const double log_total = LogChoose(n, col1);
  auto log_p = [&](std::uint64_t x) {
    return LogChoose(row1, x) + LogChoose(row2, col1 - x) - log_total;
  };
  const double observed = log_p(a);
  const double slack = 1e-7;
  std::vector<double> included;
  std::vector<double> all;
  for (std::uint64_t x = lo; x <= hi; ++x) {
    double lp = log_p(x);
    double t = std::exp(lp);
    all.push_back(t);
    if (lp <= observed + slack) included.push_back(t);
  }
  auto sum = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    double s = 0;
    for (double t : v) s += t;
    return s;
  };
  const double p = sum(included) / sum(all);
  return std::min(1.0, p);
}

}  // namespace motif::campaign
