// transliterator.cc
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The translitfst Authors.

#include "translit/transliterator.h"

#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "translit/utf8.h"
#include "translit/util.h"

namespace translit {

namespace {

std::shared_ptr<const SymbolTable> TableFromGraphemes(
    const std::set<std::string> &graphemes) {
  auto table = std::make_shared<SymbolTable>();
  for (const std::string &g : graphemes) table->AddSymbol(g);
  return table;
}

std::ifstream OpenForRead(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

Transliterator BuildTransliterator(const Lexicon &lexicon,
                                   const BuildOptions &options) {
  if (lexicon.empty()) {
    throw BuildError("empty lexicon for language \"" + lexicon.language +
                     "\"");
  }

  std::vector<LexEntry> entries;
  for (const auto &entry : lexicon.entries()) {
    for (const auto &form : entry.forms) {
      if (form.freq <= 0) continue;  // zero-count forms carry no evidence
      entries.push_back(LexEntry{entry.native, form.text,
                                 static_cast<double>(form.freq)});
    }
  }
  if (entries.empty()) {
    throw BuildError("lexicon \"" + lexicon.language +
                     "\" has no entries with positive counts");
  }

  EmOptions em_options;
  em_options.max_iters = options.em_iters;
  em_options.tol = options.em_tol;
  em_options.parallel = options.parallel;
  EmResult em = EmTrain(entries, em_options);

  std::vector<std::pair<AlignedPair, double>> sequences;
  sequences.reserve(entries.size());
  int unalignable = 0;
  for (const LexEntry &entry : entries) {
    try {
      sequences.emplace_back(
          ViterbiAlign(em.model, entry.native, entry.latin), entry.count);
    } catch (const UnalignableError &) {
      ++unalignable;
      if (!options.quiet) {
        std::cerr << "warning: skipping unalignable pair \"" << entry.native
                  << "\" / \"" << entry.latin << "\"\n";
      }
    }
  }
  if (sequences.empty()) {
    throw BuildError("lexicon \"" + lexicon.language +
                     "\": every entry is unalignable");
  }

  std::set<std::string> native_graphemes;
  std::set<std::string> latin_graphemes;
  for (const auto &[aligned, count] : sequences) {
    for (const PairSymbol &pair : aligned.pairs) {
      if (!pair.input.empty()) native_graphemes.insert(pair.input);
      if (!pair.output.empty()) latin_graphemes.insert(pair.output);
    }
  }

  Transliterator t;
  t.language = lexicon.language;
  t.align_model = em.model;
  t.lm = NGramModel::Train(sequences, options.order);
  t.native_syms = TableFromGraphemes(native_graphemes);
  t.latin_syms = TableFromGraphemes(latin_graphemes);
  t.fwd_fst = t.lm.ToFst(t.native_syms, t.latin_syms);
  t.order = options.order;
  t.em_iters = options.em_iters;
  t.em_tol = options.em_tol;
  return t;
}

TransliterationResult TransliterateWord(const Fst &machine,
                                        const std::string &word, int k) {
  const auto &isyms = machine.InputSymbols();
  if (!isyms) throw Error("TransliterateWord: machine has no input symbols");
  std::vector<std::string> codepoints = SplitCodepoints(word);
  std::string unknown;
  for (const std::string &cp : codepoints) {
    if (!isyms->Contains(cp)) {
      if (!unknown.empty()) unknown += ' ';
      unknown += cp;
    }
  }
  if (!unknown.empty()) {
    throw ParseError("word \"" + word + "\" has codepoints outside the " +
                     "input alphabet: " + unknown);
  }

  Fst lattice = Compose(LinearAcceptor(codepoints, isyms), machine);
  ShortestPathsOptions opts;
  opts.unique_outputs = true;
  TransliterationResult result;
  for (const Path &path : ShortestPaths(lattice, k, opts)) {
    result.candidates.push_back(Candidate{path.ostring, path.weight});
  }
  return result;
}

Transliterator Reverse(const Transliterator &t) {
  Transliterator reversed;
  reversed.language = t.language;
  reversed.align_model = t.align_model;
  reversed.lm = t.lm;
  reversed.fwd_fst = Invert(t.fwd_fst);
  reversed.native_syms = t.latin_syms;
  reversed.latin_syms = t.native_syms;
  reversed.order = t.order;
  reversed.em_iters = t.em_iters;
  reversed.em_tol = t.em_tol;
  return reversed;
}

Fst BuildUnion(const std::vector<Transliterator> &members) {
  if (members.empty()) throw BuildError("BuildUnion: no members");

  auto isyms = std::make_shared<SymbolTable>();
  auto osyms = std::make_shared<SymbolTable>();
  for (const Transliterator &member : members) {
    for (Label l = 1; l < member.native_syms->Size(); ++l) {
      isyms->AddSymbol(member.native_syms->Symbol(l));
    }
    for (Label l = 1; l < member.latin_syms->Size(); ++l) {
      osyms->AddSymbol(member.latin_syms->Symbol(l));
    }
  }

  Fst fst;
  fst.SetInputSymbols(isyms);
  fst.SetOutputSymbols(osyms);
  StateId start = fst.AddState();
  fst.SetStart(start);
  for (const Transliterator &member : members) {
    const Fst &sub = member.fwd_fst;
    if (sub.Empty()) continue;
    std::vector<StateId> remap(sub.NumStates());
    for (StateId s = 0; s < sub.NumStates(); ++s) remap[s] = fst.AddState();
    fst.AddArc(start, Arc{kEpsilon, kEpsilon, Weight::One(),
                          remap[sub.Start()]});
    for (StateId s = 0; s < sub.NumStates(); ++s) {
      fst.SetFinal(remap[s], sub.Final(s));
      for (const Arc &arc : sub.Arcs(s)) {
        Label il = arc.ilabel == kEpsilon
                       ? kEpsilon
                       : isyms->Find(member.native_syms->Symbol(arc.ilabel));
        Label ol = arc.olabel == kEpsilon
                       ? kEpsilon
                       : osyms->Find(member.latin_syms->Symbol(arc.olabel));
        fst.AddArc(remap[s], Arc{il, ol, arc.weight, remap[arc.nextstate]});
      }
    }
  }
  return fst;
}

void SaveBundle(const Transliterator &t, const std::filesystem::path &dir,
                bool with_timestamp) {
  std::filesystem::create_directories(dir);
  {
    auto out = OpenForWrite(dir / "alignment.tsv");
    t.align_model.Write(out);
  }
  {
    auto out = OpenForWrite(dir / "model.arpa");
    t.lm.WriteArpa(out);
  }
  {
    auto out = OpenForWrite(dir / "model.fst");
    WriteFstText(t.fwd_fst, out);
  }
  {
    auto out = OpenForWrite(dir / "native.syms");
    t.native_syms->Write(out);
  }
  {
    auto out = OpenForWrite(dir / "latin.syms");
    t.latin_syms->Write(out);
  }
  {
    auto out = OpenForWrite(dir / "manifest");
    out << "language=" << t.language << '\n';
    out << "order=" << t.order << '\n';
    out << "em_iters=" << t.em_iters << '\n';
    out << "em_tol=" << FormatDouble(t.em_tol) << '\n';
    if (with_timestamp) {
      std::time_t now = std::time(nullptr);
      char buf[32];
      std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ",
                    std::gmtime(&now));
      out << "created=" << buf << '\n';
    }
  }
}

Transliterator LoadBundle(const std::filesystem::path &dir) {
  Transliterator t;
  {
    auto in = OpenForRead(dir / "manifest");
    std::string line;
    while (std::getline(in, line)) {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(0, eq);
      std::string value = line.substr(eq + 1);
      if (key == "language") t.language = value;
      else if (key == "order") t.order = static_cast<int>(ParseCount(value));
      else if (key == "em_iters")
        t.em_iters = static_cast<int>(ParseCount(value));
      else if (key == "em_tol") t.em_tol = ParseDouble(value);
    }
  }
  {
    auto in = OpenForRead(dir / "alignment.tsv");
    t.align_model = AlignmentModel::Read(in);
  }
  {
    auto in = OpenForRead(dir / "model.arpa");
    t.lm = NGramModel::ReadArpa(in);
  }
  {
    auto in = OpenForRead(dir / "native.syms");
    t.native_syms = std::make_shared<const SymbolTable>(SymbolTable::Read(in));
  }
  {
    auto in = OpenForRead(dir / "latin.syms");
    t.latin_syms = std::make_shared<const SymbolTable>(SymbolTable::Read(in));
  }
  {
    auto in = OpenForRead(dir / "model.fst");
    t.fwd_fst = ReadFstText(in, t.native_syms, t.latin_syms);
  }
  return t;
}

}  // namespace translit
