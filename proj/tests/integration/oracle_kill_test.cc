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

#include <gtest/gtest.h>

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motif/fuzzcore/executor.h"
#include "motif/fuzzcore/fuzzer.h"
#include "motif/mutagen/mutagen.h"
#include "mutant_builds.h"
#include "test_support.h"

namespace motif {
namespace {

using ::motif::testing::HaveCCompiler;
using ::motif::testing::ReadCorpus;
using ::motif::testing::ScratchDir;

// A function with a small input domain and the C needed to enumerate it.
struct Domain {
  std::string file;
  std::string function;
  unsigned long size;
  std::string decode;  // declares the arguments from loop index `i`
  std::string args;
};

const std::vector<Domain>& Domains() {
  static const std::vector<Domain> kDomains = {
      {"sign8.c", "sign8", 256, "signed char x = (signed char)(unsigned char)i;", "x"},
      {"char_class.c", "char_class", 256, "char c = (char)(unsigned char)i;", "c"},
      {"sat_add.c", "sat_add", 65536,
       "unsigned char a = (unsigned char)(i & 0xff), b = (unsigned char)(i >> 8);", "a, b"},
      {"rotl4.c", "rotl4", 65536, "unsigned short v = (unsigned short)i;", "v"},
  };
  return kDomains;
}

// Runs original and mutant on every input; prints "KILL <i>" for the first
// diverging or crashing input, else "EQUIVALENT".
std::string OracleProgram(const Domain& d, const std::string& unit) {
  return "#include <setjmp.h>\n#include <signal.h>\n#include <stdio.h>\n" + unit +
         "\nstatic sigjmp_buf env;\n"
         "static void on_signal(int s) { (void)s; siglongjmp(env, 1); }\n"
         "int main(void) {\n"
         "  signal(SIGFPE, on_signal);\n  signal(SIGSEGV, on_signal);\n"
         "  for (unsigned long i = 0; i < " + std::to_string(d.size) + "ul; ++i) {\n"
         "    " + d.decode + "\n"
         "    long o = (long)" + d.function + "(" + d.args + ");\n"
         "    if (sigsetjmp(env, 1)) { printf(\"KILL %lu\\n\", i); return 0; }\n"
         "    long m = (long)" + std::string(mutagen::kMutantPrefix) + d.function + "(" + d.args +
         ");\n"
         "    if (o != m) { printf(\"KILL %lu\\n\", i); return 0; }\n"
         "  }\n  printf(\"EQUIVALENT\\n\");\n  return 0;\n}\n";
}

struct Subject {
  testing::MutantBuild build;
  bool killable = false;
};

class OracleKillSetTest : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!HaveCCompiler()) GTEST_SKIP() << "no C compiler";
  }
  ScratchDir dir_{"motif-oracle"};
};

TEST_F(OracleKillSetTest, FuzzerKillsKillableAndNeverUnkillable) {
  std::vector<Subject> subjects;
  for (const Domain& d : Domains()) {
    mutagen::SourceFile source{d.file, ReadCorpus(d.file)};
    for (const mutagen::Mutant& m : testing::AllMutants(source, d.function)) {
      std::string unit = mutagen::MutantUnit(source, m);
      std::optional<std::string> verdict = testing::CompileAndRun(OracleProgram(d, unit));
      auto build = testing::BuildMutant(dir_, source, d.function, m);
      if (!verdict || !build) continue;  // stillborn
      Subject s;
      s.build = *build;
      s.killable = verdict->rfind("KILL", 0) == 0;
      EXPECT_TRUE(s.killable || *verdict == "EQUIVALENT\n") << *verdict;
      subjects.push_back(std::move(s));
    }
  }
  std::size_t killable = 0;
  for (const Subject& s : subjects) killable += s.killable ? 1 : 0;
  ASSERT_GT(killable, 20u);
  ASSERT_LT(killable, subjects.size());

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::size_t killed = 0;
    for (const Subject& s : subjects) {
      fuzzcore::Executor ex(s.build.fuzz_exe,
                            dir_ / ("exec_" + std::to_string(seed) + "_" +
                                    std::to_string(s.build.mutant.id) + s.build.spec.signature.name));
      fuzzcore::FuzzOptions o;
      o.consumed_bytes = s.build.consumed_bytes;
      o.rng_seed = seed;
      o.budget.time = std::chrono::seconds(60);
      o.budget.max_execs = 4000;
      fuzzcore::FuzzOutcome out = fuzzcore::FuzzMutant(ex, s.build.seeds, o);
      std::string label = s.build.spec.signature.name + " " + s.build.mutant.original + "->" +
                          s.build.mutant.replacement + " @" +
                          std::to_string(s.build.mutant.site.begin);
      if (!s.killable) {
        EXPECT_FALSE(out.killed) << "unkillable mutant killed: " << label;
      } else if (out.killed) {
        ++killed;
      } else {
        std::printf("seed %llu missed %s\n", static_cast<unsigned long long>(seed), label.c_str());
      }
    }
    double rate = static_cast<double>(killed) / static_cast<double>(killable);
    std::printf("seed %llu: killed %zu of %zu killable (%.1f%%), %zu unkillable\n",
                static_cast<unsigned long long>(seed), killed, killable, 100 * rate,
                subjects.size() - killable);
    EXPECT_GE(rate, 0.8) << "seed " << seed;
  }
}

}  // namespace
}  // namespace motif
