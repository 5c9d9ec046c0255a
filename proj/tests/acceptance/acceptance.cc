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

// Prints PASS/FAIL for each core conformance criterion and exits nonzero if
// any of them fails.

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus_specs.h"
#include "motif/c_model/parser.h"
#include "motif/campaign/fisher.h"
#include "motif/driver_synth/driver_synth.h"
#include "motif/fuzzcore/coverage.h"
#include "motif/fuzzcore/executor.h"
#include "motif/mutagen/mutagen.h"
#include "motif/seedgen/seedgen.h"
#include "motif/util/files.h"
#include "test_support.h"

namespace motif {
namespace {

using Failures = std::vector<std::string>;

struct Criterion {
  int number;
  std::string name;
  double limit_s;
  std::function<void(Failures&)> check;
};

template <typename A, typename B>
void Expect(Failures& f, const A& actual, const B& expected, const std::string& what) {
  if (!(actual == expected)) f.push_back(what);
}

driver_synth::DriverSpec InlineSpec(const std::string& source, const std::string& function) {
  driver_synth::DriverSpec spec;
  spec.env = c_model::ParseDeclarations(source);
  spec.signature = *spec.env.FindSignature(function);
  return spec;
}

Bytes Repeat(const Bytes& unit, std::size_t times) {
  Bytes out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

void SeedConformance(Failures& f) {
  const std::vector<Bytes> units = {{0xFF, 0xFF, 0xFF, 0xFF}, {0, 0, 0, 0}, {1, 0, 0, 0}};
  auto single = seedgen::GenerateSeeds(InlineSpec("int f(int x);", "f"));
  Expect(f, single.size(), 3u, "int: expected three seed files");
  for (std::size_t k = 0; k < single.size() && k < 3; ++k) {
    Expect(f, single[k].bytes, units[k], "int: seed " + std::to_string(k + 1) + " bytes");
  }
  auto t_pos = seedgen::GenerateSeeds(
      testing::CorpusSpec("t_pos.c", "T_POS_IsConstraintValid"));
  Expect(f, t_pos.size(), 3u, "struct+int: expected three seed files");
  for (std::size_t k = 0; k < t_pos.size() && k < 3; ++k) {
    Expect(f, t_pos[k].bytes.size(), 8060u, "struct+int: seed length");
    Expect(f, t_pos[k].bytes, Repeat(units[k], 2015), "struct+int: seed bytes");
  }
}

void BucketizeConformance(Failures& f) {
  using fuzzcore::Bucket;
  const std::pair<std::uint64_t, Bucket> table[] = {
      {0, Bucket::kNone},      {1, Bucket::k1},         {2, Bucket::k2},
      {3, Bucket::k3},         {4, Bucket::k4To7},      {7, Bucket::k4To7},
      {8, Bucket::k8To15},     {15, Bucket::k8To15},    {16, Bucket::k16To31},
      {31, Bucket::k16To31},   {32, Bucket::k32To127},  {127, Bucket::k32To127},
      {128, Bucket::k128Plus}, {255, Bucket::k128Plus},
  };
  for (auto [count, bucket] : table) {
    Expect(f, fuzzcore::Bucketize(count), bucket, "count " + std::to_string(count));
  }
}

void DriverGoldens(Failures& f) {
  for (const auto& [file, fn] : testing::GoldenSignatures()) {
    auto spec = testing::CorpusSpec(file, fn);
    std::vector<driver_synth::GeneratedDriver> drivers = {
        driver_synth::GenerateFuzzingDriver(spec),
        driver_synth::GenerateFalsePositiveDriver(spec), driver_synth::GenerateTestDriver(spec)};
    for (const auto& d : drivers) {
      auto path = testing::GoldenDir() / testing::GoldenName(fn, d.kind);
      Expect(f, d.source, ReadFileText(path), path.filename().string() + " differs");
      Expect(f, d.consumed_input_bytes, drivers[0].consumed_input_bytes,
             fn + ": consumed-bytes disagreement");
    }
  }
}

std::vector<std::string> Replacements(const std::string& text, mutagen::Operator op) {
  mutagen::SourceFile src{"inline.c", text};
  std::vector<std::string> out;
  for (const auto& m : mutagen::GenerateMutants(src, mutagen::EnumerateSites(src, "", {op}), {op})) {
    out.push_back(m.replacement);
  }
  return out;
}

// The two texts differ in exactly one contiguous region besides the
// function-name prefix, and that region is the site.
bool SingleEdit(const mutagen::SourceFile& src, const mutagen::Mutant& m) {
  std::string mutant = m.mutated_source;
  const std::string prefix(mutagen::kMutantPrefix);
  if (mutant.compare(m.name_offset, prefix.size(), prefix) != 0) return false;
  mutant.erase(m.name_offset, prefix.size());
  const std::string& o = src.text;
  std::size_t head = 0;
  while (head < o.size() && head < mutant.size() && o[head] == mutant[head]) ++head;
  std::size_t tail = 0;
  while (tail < o.size() - head && tail < mutant.size() - head &&
         o[o.size() - 1 - tail] == mutant[mutant.size() - 1 - tail]) {
    ++tail;
  }
  if (head == o.size() && head == mutant.size()) return false;
  if (head < m.site.begin || o.size() - tail > m.site.end) return false;
  std::string expected = o.substr(0, m.site.begin) + m.replacement + o.substr(m.site.end);
  return mutant == expected;
}

void MutantAlgebra(Failures& f) {
  Expect(f, Replacements("int f(int a,int b){return a+b;}", mutagen::Operator::kAor),
         std::vector<std::string>{"-", "*", "/", "%"}, "AOR on '+' must give four mutants");
  Expect(f, Replacements("int f(int a,int b){return a<b;}", mutagen::Operator::kRor),
         std::vector<std::string>{"<=", ">", ">=", "==", "!="}, "ROR on '<' must give five mutants");
  std::size_t total = 0;
  for (const auto& entry : std::filesystem::directory_iterator(testing::CorpusDir())) {
    mutagen::SourceFile src{entry.path().filename().string(), ReadFileText(entry.path())};
    auto env = c_model::ParseDeclarations(src.text);
    for (const auto& def : env.definitions()) {
      auto sites = mutagen::EnumerateSites(src, def.signature.name, mutagen::AllOperators());
      for (const auto& m : mutagen::GenerateMutants(src, sites, mutagen::AllOperators())) {
        ++total;
        mutagen::Mutant tampered = m;
        tampered.mutated_source += ' ';
        if (SingleEdit(src, tampered)) f.push_back("oracle accepted a double edit");
        if (!SingleEdit(src, m)) {
          f.push_back(src.path + " mutant " + std::to_string(m.id) + " is not a single edit");
        }
      }
    }
  }
  if (total < 100) f.push_back("corpus produced only " + std::to_string(total) + " mutants");
}

std::uint64_t Choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Two-sided p-value as a ratio of integer hypergeometric weights.
double ExactFisher(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  std::uint64_t r1 = a + b, r2 = c + d, c1 = a + c, n = r1 + r2;
  if (n == 0) return 1.0;
  std::uint64_t observed = Choose(r1, a) * Choose(r2, c);
  std::uint64_t sum = 0;
  for (std::uint64_t x = 0; x <= std::min(r1, c1); ++x) {
    if (c1 - x > r2) continue;
    std::uint64_t w = Choose(r1, x) * Choose(r2, c1 - x);
    if (w <= observed) sum += w;
  }
  return static_cast<double>(sum) / static_cast<double>(Choose(n, c1));
}

void FisherExactness(Failures& f) {
  if (campaign::FisherExact(5, 5, 5, 5) != 1.0) f.push_back("p(5,5;5,5) != 1");
  if (std::abs(campaign::FisherExact(10, 0, 0, 10) - 2.0 / 184756.0) > 1e-15) {
    f.push_back("p(10,0;0,10) != 2/184756");
  }
  std::size_t bad = 0;
  for (std::uint64_t n = 0; n <= 40; ++n) {
    for (std::uint64_t a = 0; a <= n; ++a) {
      for (std::uint64_t b = 0; a + b <= n; ++b) {
        for (std::uint64_t c = 0; a + b + c <= n; ++c) {
          std::uint64_t d = n - a - b - c;
          if (std::abs(campaign::FisherExact(a, b, c, d) - ExactFisher(a, b, c, d)) > 1e-9) {
            if (++bad <= 5) {
              std::ostringstream s;
              s << "mismatch at (" << a << "," << b << ";" << c << "," << d << ")";
              f.push_back(s.str());
            }
          }
        }
      }
    }
  }
}

fuzzcore::ExecOutcome Synthetic(fuzzcore::Termination t, int code_or_signal, const char* log) {
  fuzzcore::ExecOutcome o;
  o.termination = t;
  if (t == fuzzcore::Termination::kSignaled) o.signal = code_or_signal;
  else o.exit_code = code_or_signal;
  o.trace = fuzzcore::ParseCheckpointLog(log);
  return o;
}

void Classification(Failures& f) {
  using fuzzcore::Termination;
  using fuzzcore::Verdict;
  struct Case {
    fuzzcore::ExecOutcome outcome;
    Verdict expected;
  };
  const Case cases[] = {
      {Synthetic(Termination::kExited, 0, "CALL_ORIG\nRET_ORIG\nCALL_MUT\nRET_MUT\nEQ\n"),
       Verdict::kSurvived},
      {Synthetic(Termination::kSignaled, SIGABRT, "CALL_ORIG\nRET_ORIG\nCALL_MUT\nRET_MUT\nDIFF\n"),
       Verdict::kKillDiff},
      {Synthetic(Termination::kSignaled, SIGSEGV, "CALL_ORIG\nRET_ORIG\nCALL_MUT\n"),
       Verdict::kKillCrashMut},
      {Synthetic(Termination::kSignaled, SIGSEGV, "CALL_ORIG\n"),
       Verdict::kPreconditionViolation},
      {Synthetic(Termination::kTimedOut, 0, "CALL_ORIG\nRET_ORIG\nCALL_MUT\n"),
       Verdict::kTimeoutHang},
  };
  for (const Case& c : cases) {
    Verdict got = fuzzcore::Classify(c.outcome);
    if (got != c.expected) {
      f.push_back(std::string("expected ") + std::string(fuzzcore::VerdictName(c.expected)) +
                  ", got " + std::string(fuzzcore::VerdictName(got)));
    }
  }
}

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "seed conformance", 1, SeedConformance},
      {2, "bucketize conformance", 1, BucketizeConformance},
      {3, "driver golden files", 1, DriverGoldens},
      {4, "mutant algebra", 5, MutantAlgebra},
      {5, "fisher exactness", 30, FisherExactness},
      {6, "classification from synthetic logs", 1, Classification},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Failures failures;
    auto start = std::chrono::steady_clock::now();
    try {
      c.check(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s > c.limit_s) failures.push_back("took " + std::to_string(s) + " s");
    std::printf("%s %d %s (%.3f s)\n", failures.empty() ? "PASS" : "FAIL", c.number,
                c.name.c_str(), s);
    for (const auto& msg : failures) std::printf("  %s\n", msg.c_str());
    if (!failures.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace motif

int main() { return motif::Main(); }
