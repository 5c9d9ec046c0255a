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

#include <algorithm>
#include <string>
#include <vector>

#include "motif/c_model/parser.h"
#include "motif/mutagen/mutagen.h"
#include "motif/mutagen/tce.h"
#include "test_support.h"

namespace motif::mutagen {
namespace {

using ::motif::testing::HaveCCompiler;
using ::motif::testing::ReadCorpus;
using ::motif::testing::ScratchDir;

const std::vector<std::string> kCorpus = {
    "clamp.c", "checksum.c", "t_pos.c", "poly.c", "trim.c", "counter.c",
    "sign8.c", "sat_add.c", "char_class.c", "rotl4.c", "safe_div.c", "scale.c"};

SourceFile Inline(std::string text) { return {"inline.c", std::move(text)}; }

std::vector<std::string> Texts(const std::vector<MutationSite>& sites) {
  std::vector<std::string> out;
  for (const auto& s : sites) out.push_back(s.text);
  return out;
}

std::vector<std::string> Replacements(const std::vector<Mutant>& mutants) {
  std::vector<std::string> out;
  for (const auto& m : mutants) out.push_back(m.replacement);
  return out;
}

TEST(EnumerateSitesTest, SingleAdditionUnderAor) {
  SourceFile src = Inline("int f(int a,int b){return a+b;}");
  auto sites = EnumerateSites(src, "", {Operator::kAor});
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].kind, SiteKind::kBinaryArith);
  EXPECT_EQ(sites[0].text, "+");
  EXPECT_EQ(sites[0].begin, src.text.find('+'));
  EXPECT_EQ(sites[0].function, "f");
}

TEST(EnumerateSitesTest, NoRelationalTokens) {
  EXPECT_TRUE(EnumerateSites(Inline("int f(void){return 0;}"), "", {Operator::kRor}).empty());
}

TEST(EnumerateSitesTest, RelationalAndStatement) {
  SourceFile src = Inline("void f(int x, int y){if (x <= 0) y++;}");
  auto sites = EnumerateSites(src, "", {Operator::kRor, Operator::kSdl});
  ASSERT_EQ(sites.size(), 2u);
  EXPECT_EQ(sites[0].kind, SiteKind::kRelational);
  EXPECT_EQ(sites[0].text, "<=");
  EXPECT_EQ(sites[1].kind, SiteKind::kStatement);
  EXPECT_EQ(sites[1].text, "y++;");
}

TEST(EnumerateSitesTest, NoDefinitionIsParseFailure) {
  try {
    EnumerateSites(Inline("int f(int a);"), "", AllOperators());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseFailure);
  }
  EXPECT_THROW(EnumerateSites(Inline("int f(void){return 1;}"), "g", AllOperators()), Error);
}

TEST(EnumerateSitesTest, LiteralsAndCommentsAreMasked) {
  SourceFile src = Inline(
      "int f(const char *s){ /* a+b < c */ return s[0] == '+' && \"x-y\"[0] != 0; }");
  auto sites = EnumerateSites(src, "", {Operator::kAor, Operator::kRor, Operator::kLcr});
  EXPECT_EQ(Texts(sites), (std::vector<std::string>{"==", "&&", "!="}));
}

TEST(EnumerateSitesTest, UnaryAndPointerTokensAreNotBinary) {
  SourceFile src = Inline(
      "typedef int T;\n"
      "int f(int *p, int a, int b){ T *q = p; int *r = &a; "
      "return *q + (int) -a * sizeof(int) * 2 - (a) & b + -*r; }");
  auto sites = EnumerateSites(src, "", {Operator::kAor, Operator::kBwr});
  EXPECT_EQ(Texts(sites), (std::vector<std::string>{"+", "*", "*", "-", "&", "+"}));
}

TEST(EnumerateSitesTest, UnaryInsertionTargetsScalarRvalues) {
  SourceFile src = Inline(
      "int f(int a, double d, int *p){ int i = a, arr[3]; float g; "
      "i += a; g = d; arr[0] = i; p[0] = a; i++; return i + (int)g + *p; }");
  auto sites = EnumerateSites(src, "", {Operator::kUoi});
  std::vector<std::string> texts = Texts(sites);
  EXPECT_EQ(texts, (std::vector<std::string>{"a", "a", "d", "i", "a", "i", "g"}));
  auto d = std::find_if(sites.begin(), sites.end(), [](auto& s) { return s.text == "d"; });
  EXPECT_TRUE(d->floating);
  EXPECT_EQ(Alternatives(*d), (std::vector<std::string>{"(!d)", "(-d)"}));
  EXPECT_EQ(Alternatives(sites[0]), (std::vector<std::string>{"(!a)", "(-a)", "(~a)"}));
}

TEST(EnumerateSitesTest, StatementsAcrossControlFlow) {
  SourceFile src = Inline(
      "int f(int n){ int s = 0; for (int i = 0; i < n; i++) { s += i; }\n"
      "  switch (n) { case 1: s--; break; default: s++; }\n"
      "  do s <<= 1; while (s < 10);\n"
      "  if (s) s = 1; else { s = 2; }\n"
      "  return s; }");
  auto sites = EnumerateSites(src, "", {Operator::kSdl});
  EXPECT_EQ(Texts(sites), (std::vector<std::string>{"s += i;", "s--;", "s++;", "s <<= 1;",
                                                    "s = 1;", "s = 2;"}));
}

TEST(EnumerateSitesTest, ConstantsSkipDeclaredBounds) {
  SourceFile src = Inline("int f(int x){ int buf[4] = {0}; buf[1] = x; return buf[1] + 0x10u; }");
  auto sites = EnumerateSites(src, "", {Operator::kIcr});
  EXPECT_EQ(Texts(sites), (std::vector<std::string>{"0", "1", "1", "0x10u"}));
}

TEST(AlternativesTest, ConstantReplacementTable) {
  auto alt = [](std::string text) {
    return Alternatives(MutationSite{"", "f", 0, text.size(), SiteKind::kConstant, text});
  };
  EXPECT_EQ(alt("5"), (std::vector<std::string>{"0", "1", "(-1)", "6", "4"}));
  EXPECT_EQ(alt("0"), (std::vector<std::string>{"1", "(-1)"}));
  EXPECT_EQ(alt("1"), (std::vector<std::string>{"0", "(-1)", "2"}));
  EXPECT_EQ(alt("0x10u"), (std::vector<std::string>{"0u", "1u", "(-1u)", "17u", "15u"}));
}

TEST(GenerateMutantsTest, AdditionYieldsFour) {
  SourceFile src = Inline("int f(int a,int b){return a+b;}");
  auto sites = EnumerateSites(src, "", {Operator::kAor});
  auto mutants = GenerateMutants(src, sites, {Operator::kAor});
  EXPECT_EQ(Replacements(mutants), (std::vector<std::string>{"-", "*", "/", "%"}));
  EXPECT_EQ(mutants[0].mutated_source, "int mut_f(int a,int b){return a-b;}");
  EXPECT_EQ(mutants[3].id, 4);
  EXPECT_EQ(MutantFileName(mutants[1]), "f.mut2.AOR.c");
}

TEST(GenerateMutantsTest, LessThanYieldsFive) {
  SourceFile src = Inline("int f(int a,int b){return a<b;}");
  auto mutants = GenerateMutants(src, EnumerateSites(src, "", {Operator::kRor}), {Operator::kRor});
  EXPECT_EQ(Replacements(mutants), (std::vector<std::string>{"<=", ">", ">=", "==", "!="}));
}

TEST(GenerateMutantsTest, StatementDeletion) {
  SourceFile src = Inline("void f(int x, int y){if (x <= 0) y++;}");
  auto mutants = GenerateMutants(src, EnumerateSites(src, "", {Operator::kSdl}), {Operator::kSdl});
  ASSERT_EQ(mutants.size(), 1u);
  EXPECT_EQ(mutants[0].mutated_source, "void mut_f(int x, int y){if (x <= 0) ;}");
  EXPECT_EQ(EditedSource(mutants[0]), "void f(int x, int y){if (x <= 0) ;}");
}

TEST(GenerateMutantsTest, DisabledOperatorsProduceNothing) {
  SourceFile src = Inline("int f(int a,int b){return a+b;}");
  auto sites = EnumerateSites(src, "", AllOperators());
  for (const Mutant& m : GenerateMutants(src, sites, {Operator::kRor})) {
    ADD_FAILURE() << m.replacement;
  }
}

TEST(GenerateMutantsTest, MutantUnitHoldsBothFunctions) {
  SourceFile src = {"scale.c", ReadCorpus("scale.c")};
  auto mutants = GenerateMutants(src, EnumerateSites(src, "add", {Operator::kAor}), {Operator::kAor});
  ASSERT_FALSE(mutants.empty());
  std::string unit = MutantUnit(src, mutants[0]);
  EXPECT_EQ(unit.find(src.text), 0u);
  EXPECT_NE(unit.find("int mut_add(int a, int b) {\n  return a - b;\n}"), std::string::npos);
}

// diff(original, mutant) is the site edit plus the "mut_" prefix.
void ExpectSingleEdit(const SourceFile& src, const Mutant& m) {
  const std::string& o = src.text;
  const std::string& x = m.mutated_source;
  std::size_t n = m.name_offset;
  ASSERT_EQ(x.compare(0, n, o, 0, n), 0);
  ASSERT_EQ(x.compare(n, kMutantPrefix.size(), kMutantPrefix), 0);
  std::size_t shift = kMutantPrefix.size();
  ASSERT_EQ(x.compare(n + shift, m.site.begin - n, o, n, m.site.begin - n), 0);
  ASSERT_EQ(x.compare(m.site.begin + shift, m.replacement.size(), m.replacement), 0);
  std::size_t tail = o.size() - m.site.end;
  ASSERT_EQ(x.size(), o.size() + shift + m.replacement.size() - (m.site.end - m.site.begin));
  ASSERT_EQ(x.compare(x.size() - tail, tail, o, m.site.end, tail), 0);
  EXPECT_NE(m.replacement, m.original);
}

TEST(MutantPropertyTest, SingleEditOnCorpus) {
  std::size_t total = 0;
  for (const std::string& file : kCorpus) {
    SourceFile src = {file, ReadCorpus(file)};
    c_model::TypeEnvironment env = c_model::ParseDeclarations(src.text);
    for (const auto& def : env.definitions()) {
      auto sites = EnumerateSites(src, def.signature.name, AllOperators());
      for (const Mutant& m : GenerateMutants(src, sites, AllOperators())) {
        SCOPED_TRACE(file + " mutant " + std::to_string(m.id));
        ExpectSingleEdit(src, m);
        ++total;
      }
    }
  }
  EXPECT_GT(total, 100u);
}

TEST(MutantPropertyTest, SitesAreOrderedAndDisjointPerKind) {
  for (const std::string& file : kCorpus) {
    SourceFile src = {file, ReadCorpus(file)};
    c_model::TypeEnvironment env = c_model::ParseDeclarations(src.text);
    for (const auto& def : env.definitions()) {
      auto sites = EnumerateSites(src, def.signature.name, AllOperators());
      for (std::size_t i = 0; i < sites.size(); ++i) {
        EXPECT_GE(sites[i].begin, def.body_begin);
        EXPECT_LE(sites[i].end, def.end);
        EXPECT_EQ(src.text.substr(sites[i].begin, sites[i].end - sites[i].begin), sites[i].text);
        if (i > 0) EXPECT_LE(sites[i - 1].begin, sites[i].begin);
        for (std::size_t j = 0; j < i; ++j) {
          if (sites[j].kind == sites[i].kind) EXPECT_LE(sites[j].end, sites[i].begin) << file;
        }
      }
      EXPECT_EQ(sites, EnumerateSites(src, def.signature.name, AllOperators()));
    }
  }
}

TEST(TceFilterTest, PlantedEquivalentAndKept) {
  if (!HaveCCompiler()) GTEST_SKIP() << "no C compiler";
  SourceFile src = {"scale.c", ReadCorpus("scale.c")};
  c_model::TypeEnvironment env = c_model::ParseDeclarations(src.text);
  const auto& scale = *env.FindDefinition("scale");
  const auto& add = *env.FindDefinition("add");

  std::size_t times = src.text.find("x * 1");
  MutationSite times_site{src.path, "scale", times, times + 5, SiteKind::kBinaryArith, "x * 1"};
  std::size_t plus = src.text.find("a + b") + 2;
  MutationSite plus_site{src.path, "add", plus, plus + 1, SiteKind::kBinaryArith, "+"};

  std::vector<Mutant> mutants = {
      MakeMutant(src, scale, times_site, Operator::kAor, "x", 1),
      MakeMutant(src, add, plus_site, Operator::kAor, "-", 2),
      MakeMutant(src, add, plus_site, Operator::kAor, "-", 3),
      MakeMutant(src, add, plus_site, Operator::kAor, "+ *", 4),
  };
  ScratchDir dir;
  TceOptions options;
  options.work_dir = dir.path();
  options.jobs = 2;
  TceResult r = TceFilter(src, mutants, options);
  EXPECT_EQ(r.equivalent, std::vector<int>{1});
  EXPECT_EQ(r.kept, std::vector<int>{2});
  EXPECT_EQ(r.duplicate, std::vector<int>{3});
  EXPECT_EQ(r.stillborn, std::vector<int>{4});
  EXPECT_EQ(mutants[0].status, MutantStatus::kTceEquivalent);
  EXPECT_EQ(mutants[1].status, MutantStatus::kPending);
  EXPECT_EQ(mutants[2].duplicate_of, 2);
  EXPECT_FALSE(mutants[3].diagnostic.empty());
}

TEST(TceFilterTest, MissingCompiler) {
  SourceFile src = Inline("int f(int a){return a;}");
  std::vector<Mutant> none;
  ScratchDir dir;
  TceOptions options;
  options.work_dir = dir.path();
  options.compile_template = "no-such-compiler-xyz -c {src} -o {out}";
  try {
    TceFilter(src, none, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCompilerUnavailable);
  }
}

TEST(TceFilterTest, TemplateExpansion) {
  EXPECT_EQ(ExpandCompileTemplate("cc {optlevel} -c '{src}' -o {out}", "a b.c", "a.o", ""),
            (std::vector<std::string>{"cc", "-c", "a b.c", "-o", "a.o"}));
}

// Every mutant that survives TCE also builds in the unit the drivers link
// against.
TEST(TceFilterTest, KeptCorpusMutantsCompile) {
  if (!HaveCCompiler()) GTEST_SKIP() << "no C compiler";
  for (const std::string& file : {"clamp.c", "rotl4.c"}) {
    SourceFile src = {file, ReadCorpus(file)};
    auto mutants = GenerateMutants(src, EnumerateSites(src, "", AllOperators()), AllOperators());
    ScratchDir dir;
    TceOptions options;
    options.work_dir = dir.path();
    TceResult r = TceFilter(src, mutants, options);
    EXPECT_FALSE(r.kept.empty()) << file;
    std::size_t accounted = r.kept.size() + r.equivalent.size() + r.duplicate.size() +
                            r.stillborn.size();
    EXPECT_EQ(accounted, mutants.size());
    for (const Mutant& m : mutants) {
      if (m.status != MutantStatus::kPending) continue;
      std::vector<Mutant> none;
      SourceFile unit = {file, MutantUnit(src, m)};
      TceOptions o2 = options;
      o2.work_dir = dir.path() / ("unit" + std::to_string(m.id));
      EXPECT_NO_THROW(TceFilter(unit, none, o2)) << MutantFileName(m);
    }
  }
}

}  // namespace
}  // namespace motif::mutagen
