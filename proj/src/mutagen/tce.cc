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

#include "motif/mutagen/tce.h"

#include <elf.h>

#include <algorithm>
#include <atomic>
#include <cstring>
#include <map>
#include <string_view>
#include <thread>

#include "motif/error.h"
#include "motif/util/files.h"
#include "motif/util/subprocess.h"

namespace motif::mutagen {
namespace {

template <typename T>
bool ReadAt(std::span<const std::uint8_t> data, std::uint64_t offset, T* out) {
  if (offset > data.size() || data.size() - offset < sizeof(T)) return false;
  std::memcpy(out, data.data() + offset, sizeof(T));
  return true;
}

std::string_view StringAt(std::span<const std::uint8_t> data, const Elf64_Shdr& table,
                          std::uint32_t index) {
  if (table.sh_offset > data.size() || index >= table.sh_size) return {};
  const char* base = reinterpret_cast<const char*>(data.data() + table.sh_offset);
  std::size_t limit = std::min<std::uint64_t>(table.sh_size, data.size() - table.sh_offset);
  std::size_t n = strnlen(base + index, limit - index);
  return {base + index, n};
}

class Canonical {
 public:
  void Add(std::string_view s) {
    AddNumber(s.size());
    text_.append(s);
  }
  void AddNumber(std::uint64_t v) { text_.append(reinterpret_cast<const char*>(&v), sizeof(v)); }
  void AddBytes(std::span<const std::uint8_t> b) {
    AddNumber(b.size());
    text_.append(reinterpret_cast<const char*>(b.data()), b.size());
  }
  std::uint64_t Digest() const { return Fnv1a64(text_); }

 private:
  std::string text_;
};

std::optional<std::uint64_t> ElfDigest(std::span<const std::uint8_t> data) {
  Elf64_Ehdr eh;
  if (!ReadAt(data, 0, &eh)) return std::nullopt;
  if (std::memcmp(eh.e_ident, ELFMAG, SELFMAG) != 0 || eh.e_ident[EI_CLASS] != ELFCLASS64 ||
      eh.e_shentsize != sizeof(Elf64_Shdr)) {
    return std::nullopt;
  }
  std::vector<Elf64_Shdr> sections(eh.e_shnum);
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (!ReadAt(data, eh.e_shoff + i * sizeof(Elf64_Shdr), &sections[i])) return std::nullopt;
  }
  if (eh.e_shstrndx >= sections.size()) return std::nullopt;
  const Elf64_Shdr& shstr = sections[eh.e_shstrndx];
  auto section_name = [&](std::size_t i) -> std::string_view {
    if (i >= sections.size()) return {};
    return StringAt(data, shstr, sections[i].sh_name);
  };
  auto contents = [&](const Elf64_Shdr& s) -> std::span<const std::uint8_t> {
    if (s.sh_type == SHT_NOBITS || s.sh_offset > data.size()) return {};
    return data.subspan(s.sh_offset, std::min<std::uint64_t>(s.sh_size, data.size() - s.sh_offset));
  };
  auto allocated = [&](std::size_t i) {
    return i < sections.size() && (sections[i].sh_flags & SHF_ALLOC) != 0;
  };

  Canonical c;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const Elf64_Shdr& s = sections[i];
    if (allocated(i)) {
      c.Add(section_name(i));
      c.AddNumber(s.sh_type);
      c.AddNumber(s.sh_flags);
      c.AddNumber(s.sh_size);
      c.AddBytes(contents(s));
      continue;
    }
    if (s.sh_type == SHT_SYMTAB) {
      if (s.sh_link >= sections.size()) return std::nullopt;
      std::span<const std::uint8_t> syms = contents(s);
      for (std::size_t off = 0; off + sizeof(Elf64_Sym) <= syms.size(); off += sizeof(Elf64_Sym)) {
        Elf64_Sym sym;
        std::memcpy(&sym, syms.data() + off, sizeof(sym));
        int bind = ELF64_ST_BIND(sym.st_info);
        if ((bind != STB_GLOBAL && bind != STB_WEAK) || sym.st_shndx == SHN_UNDEF) continue;
        c.Add(StringAt(data, sections[s.sh_link], sym.st_name));
        c.Add(section_name(sym.st_shndx));
        c.AddNumber(sym.st_value);
        c.AddNumber(sym.st_size);
        c.AddNumber(sym.st_info);
      }
      continue;
    }
    if ((s.sh_type == SHT_RELA || s.sh_type == SHT_REL) && allocated(s.sh_info)) {
      if (s.sh_link >= sections.size()) return std::nullopt;
      const Elf64_Shdr& symtab = sections[s.sh_link];
      if (symtab.sh_link >= sections.size()) return std::nullopt;
      std::span<const std::uint8_t> rels = contents(s);
      std::size_t entsize = s.sh_type == SHT_RELA ? sizeof(Elf64_Rela) : sizeof(Elf64_Rel);
      c.Add(section_name(s.sh_info));
      for (std::size_t off = 0; off + entsize <= rels.size(); off += entsize) {
        Elf64_Rela r{};
        std::memcpy(&r, rels.data() + off, entsize);
        Elf64_Sym sym{};
        ReadAt(data, symtab.sh_offset + ELF64_R_SYM(r.r_info) * sizeof(Elf64_Sym), &sym);
        c.AddNumber(r.r_offset);
        c.AddNumber(ELF64_R_TYPE(r.r_info));
        c.AddNumber(static_cast<std::uint64_t>(r.r_addend));
        if (ELF64_ST_TYPE(sym.st_info) == STT_SECTION) {
          c.Add(section_name(sym.st_shndx));
        } else {
          c.Add(StringAt(data, sections[symtab.sh_link], sym.st_name));
        }
      }
    }
  }
  return c.Digest();
}

struct Compiled {
  bool ok = false;
  std::vector<std::uint64_t> digests;  // one per optimization level
  std::string diagnostic;
};

Compiled Compile(const std::string& text, const std::filesystem::path& dir,
                 const TceOptions& options) {
  Compiled result;
  std::filesystem::create_directories(dir);
  WriteFileText(dir / "unit.c", text);
  for (const std::string& level : options.optimization_levels) {
    ProcessOptions p;
    p.argv = ExpandCompileTemplate(options.compile_template, "unit.c", "unit.o", level);
    p.argv.insert(p.argv.end(), options.extra_args.begin(), options.extra_args.end());
    p.working_directory = dir.string();
    p.capture_output = true;
    p.timeout = std::chrono::seconds(60);
    ProcessResult r = RunProcess(p);
    if (!r.Succeeded()) {
      result.diagnostic = "compile failed at " + level + ": " + r.output;
      return result;
    }
    result.digests.push_back(ObjectDigest(ReadFileBytes(dir / "unit.o")));
  }
  result.ok = true;
  return result;
}

}  // namespace

std::vector<std::string> ExpandCompileTemplate(const std::string& tmpl, const std::string& src,
                                               const std::string& out,
                                               const std::string& optlevel) {
  const std::pair<std::string_view, const std::string*> kPlaceholders[] = {
      {"{src}", &src}, {"{out}", &out}, {"{optlevel}", &optlevel}};
  std::vector<std::string> argv;
  for (std::string arg : SplitCommandLine(tmpl)) {
    for (const auto& [key, value] : kPlaceholders) {
      for (std::size_t pos = arg.find(key); pos != std::string::npos;
           pos = arg.find(key, pos + value->size())) {
        arg.replace(pos, key.size(), *value);
      }
    }
    if (!arg.empty()) argv.push_back(std::move(arg));
  }
  return argv;
}

std::uint64_t ObjectDigest(std::span<const std::uint8_t> object) {
  if (auto d = ElfDigest(object)) return *d;
  return Fnv1a64(object);
}

TceResult TceFilter(const SourceFile& original, std::vector<Mutant>& mutants,
                    const TceOptions& options) {
  if (options.optimization_levels.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "no optimization levels configured");
  }
  std::vector<std::string> probe =
      ExpandCompileTemplate(options.compile_template, "unit.c", "unit.o", "");
  if (probe.empty() || !FindInPath(probe[0])) {
    throw Error(ErrorCode::kCompilerUnavailable,
                "compiler not found: " + (probe.empty() ? std::string("<empty>") : probe[0]));
  }
  std::filesystem::path root = options.work_dir;
  Compiled base = Compile(original.text, root / "original", options);
  if (!base.ok) {
    throw Error(ErrorCode::kCompilerUnavailable, original.path + ": " + base.diagnostic);
  }

  std::vector<Compiled> compiled(mutants.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < mutants.size(); i = next++) {
      compiled[i] = Compile(EditedSource(mutants[i]),
                            root / ("m" + std::to_string(mutants[i].id)), options);
    }
  };
  std::vector<std::thread> threads;
  int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(mutants.size())));
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::vector<std::size_t> order(mutants.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mutants[a].id < mutants[b].id; });

  TceResult result;
  std::vector<std::map<std::uint64_t, int>> first_by_level(options.optimization_levels.size());
  for (std::size_t i : order) {
    Mutant& m = mutants[i];
    const Compiled& c = compiled[i];
    if (!c.ok) {
      m.status = MutantStatus::kStillborn;
      m.diagnostic = c.diagnostic;
      result.stillborn.push_back(m.id);
      continue;
    }
    bool equivalent = false;
    std::optional<int> twin;
    for (std::size_t l = 0; l < c.digests.size(); ++l) {
      if (c.digests[l] == base.digests[l]) equivalent = true;
      auto it = first_by_level[l].find(c.digests[l]);
      if (it != first_by_level[l].end() && (!twin || it->second < *twin)) twin = it->second;
    }
    if (equivalent) {
      m.status = MutantStatus::kTceEquivalent;
      result.equivalent.push_back(m.id);
    } else if (twin) {
      m.status = MutantStatus::kTceDuplicate;
      m.duplicate_of = twin;
      result.duplicate.push_back(m.id);
    } else {
      result.kept.push_back(m.id);
      for (std::size_t l = 0; l < c.digests.size(); ++l) {
        first_by_level[l].emplace(c.digests[l], m.id);
      }
    }
  }
  return result;
}

}  // namespace motif::mutagen
