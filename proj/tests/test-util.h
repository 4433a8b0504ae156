// test-util.h
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
//
// Shared fixtures and brute-force oracles. Everything here enumerates or
// recomputes from first principles, independent of the library's
// algorithm implementations.

#ifndef TRANSLIT_TESTS_TEST_UTIL_H_
#define TRANSLIT_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "translit/fst.h"
#include "translit/lexicon.h"
#include "translit/pair-align.h"
#include "translit/utf8.h"

namespace translit {
namespace testing {

// ---------------------------------------------------------------------
// FST oracles

struct RawPath {
  std::string istring;
  std::string ostring;
  double weight;

  friend bool operator<(const RawPath &a, const RawPath &b) {
    return std::tie(a.weight, a.ostring, a.istring) <
           std::tie(b.weight, b.ostring, b.istring);
  }
  friend bool operator==(const RawPath &a, const RawPath &b) {
    return a.weight == b.weight && a.ostring == b.ostring &&
           a.istring == b.istring;
  }
};

// Every accepting path of an acyclic machine by depth-first search.
inline std::vector<RawPath> EnumeratePaths(const Fst &fst) {
  std::vector<RawPath> paths;
  if (fst.Empty()) return paths;
  auto name = [](Label l, const std::shared_ptr<const SymbolTable> &syms) {
    if (l == kEpsilon) return std::string();
    if (syms) return syms->Symbol(l);
    return "[" + std::to_string(l) + "]";
  };
  struct Frame {
    StateId state;
    std::string istr, ostr;
    double weight;
  };
  std::vector<Frame> stack{{fst.Start(), "", "", 0.0}};
  while (!stack.empty()) {
    Frame frame = stack.back();
    stack.pop_back();
    if (fst.IsFinal(frame.state)) {
      paths.push_back(RawPath{frame.istr, frame.ostr,
                              frame.weight + fst.Final(frame.state).value});
    }
    for (const Arc &arc : fst.Arcs(frame.state)) {
      stack.push_back(Frame{arc.nextstate,
                            frame.istr + name(arc.ilabel, fst.InputSymbols()),
                            frame.ostr + name(arc.olabel, fst.OutputSymbols()),
                            frame.weight + arc.weight.value});
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

// Cheapest weight per (istring, ostring).
inline std::map<std::pair<std::string, std::string>, double> PathRelation(
    const std::vector<RawPath> &paths) {
  std::map<std::pair<std::string, std::string>, double> relation;
  for (const RawPath &path : paths) {
    auto key = std::make_pair(path.istring, path.ostring);
    auto it = relation.find(key);
    if (it == relation.end() || path.weight < it->second) {
      relation[key] = path.weight;
    }
  }
  return relation;
}

// Brute-force composition: join the path relations on A's output string.
inline std::map<std::pair<std::string, std::string>, double> JoinRelations(
    const std::vector<RawPath> &a, const std::vector<RawPath> &b) {
  std::map<std::pair<std::string, std::string>, double> joined;
  for (const RawPath &pa : a) {
    for (const RawPath &pb : b) {
      if (pa.ostring != pb.istring) continue;
      auto key = std::make_pair(pa.istring, pb.ostring);
      double w = pa.weight + pb.weight;
      auto it = joined.find(key);
      if (it == joined.end() || w < it->second) joined[key] = w;
    }
  }
  return joined;
}

// Random acyclic machine: arcs only run from lower to higher state ids,
// weights are multiples of 0.25 so tropical sums compare exactly.
inline Fst RandomAcyclicFst(std::mt19937 *rng,
                            std::shared_ptr<const SymbolTable> syms,
                            int max_states = 6, double epsilon_prob = 0.25) {
  std::uniform_int_distribution<int> nstates(2, max_states);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> weight_step(0, 8);
  int n = nstates(*rng);
  std::uniform_int_distribution<int> label(1, static_cast<int>(syms->Size()) - 1);

  Fst fst;
  fst.SetInputSymbols(syms);
  fst.SetOutputSymbols(syms);
  for (int i = 0; i < n; ++i) fst.AddState();
  fst.SetStart(0);
  fst.SetFinal(n - 1, Weight(weight_step(*rng) * 0.25));
  for (int s = 0; s < n - 1; ++s) {
    int arcs = std::uniform_int_distribution<int>(1, 3)(*rng);
    for (int a = 0; a < arcs; ++a) {
      int t = std::uniform_int_distribution<int>(s + 1, n - 1)(*rng);
      Label il = unit(*rng) < epsilon_prob ? kEpsilon : label(*rng);
      Label ol = unit(*rng) < epsilon_prob ? kEpsilon : label(*rng);
      fst.AddArc(s, Arc{il, ol, Weight(weight_step(*rng) * 0.25), t});
    }
    if (unit(*rng) < 0.2) fst.SetFinal(s, Weight(weight_step(*rng) * 0.25));
  }
  return fst;
}

inline std::shared_ptr<const SymbolTable> AbcTable() {
  auto table = std::make_shared<SymbolTable>();
  table->AddSymbol("a");
  table->AddSymbol("b");
  table->AddSymbol("c");
  return table;
}

// ---------------------------------------------------------------------
// Alignment oracles

// All monotone alignments of two codepoint sequences, by recursion.
inline void EnumerateAlignmentsRec(const std::vector<std::string> &native,
                                   const std::vector<std::string> &latin,
                                   size_t i, size_t j,
                                   std::vector<PairSymbol> *prefix,
                                   std::vector<std::vector<PairSymbol>> *out) {
  if (i == native.size() && j == latin.size()) {
    out->push_back(*prefix);
    return;
  }
  if (i < native.size() && j < latin.size()) {
    prefix->push_back({native[i], latin[j]});
    EnumerateAlignmentsRec(native, latin, i + 1, j + 1, prefix, out);
    prefix->pop_back();
  }
  if (i < native.size()) {
    prefix->push_back({native[i], ""});
    EnumerateAlignmentsRec(native, latin, i + 1, j, prefix, out);
    prefix->pop_back();
  }
  if (j < latin.size()) {
    prefix->push_back({"", latin[j]});
    EnumerateAlignmentsRec(native, latin, i, j + 1, prefix, out);
    prefix->pop_back();
  }
}

inline std::vector<std::vector<PairSymbol>> EnumerateAlignments(
    const std::string &native, const std::string &latin) {
  std::vector<std::string> n = SplitCodepoints(native);
  std::vector<std::string> l = SplitCodepoints(latin);
  std::vector<PairSymbol> prefix;
  std::vector<std::vector<PairSymbol>> out;
  EnumerateAlignmentsRec(n, l, 0, 0, &prefix, &out);
  return out;
}

inline double AlignmentProb(const AlignmentModel &model,
                            const std::vector<PairSymbol> &alignment) {
  double p = 1.0;
  for (const PairSymbol &pair : alignment) p *= model.Prob(pair);
  return p;
}

// ---------------------------------------------------------------------
// Cipher fixture: a deterministic per-codepoint substitution between a
// native block and Latin letters, the ground truth for round-trip tests.

struct Cipher {
  char32_t native_base = 0x0915;  // Devanagari by default
  int alphabet = 20;

  std::string NativeLetter(int i) const {
    return EncodeCodepoint(native_base + static_cast<char32_t>(i));
  }
  std::string LatinLetter(int i) const {
    return std::string(1, static_cast<char>('a' + i));
  }
  std::string Apply(const std::string &native) const {
    std::string out;
    for (char32_t cp : DecodeString(native)) {
      out += LatinLetter(static_cast<int>(cp - native_base));
    }
    return out;
  }
  std::string Unapply(const std::string &latin) const {
    std::string out;
    for (char c : latin) out += NativeLetter(c - 'a');
    return out;
  }
};

// `words` distinct native words with their cipher romanization, count 1.
inline Lexicon CipherLexicon(const Cipher &cipher, int words, unsigned seed,
                             const std::string &language = "hi") {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> length(3, 8);
  std::uniform_int_distribution<int> letter(0, cipher.alphabet - 1);
  std::set<std::string> seen;
  Lexicon lexicon;
  lexicon.language = language;
  while (static_cast<int>(seen.size()) < words) {
    int len = length(rng);
    std::string native;
    for (int i = 0; i < len; ++i) native += cipher.NativeLetter(letter(rng));
    if (!seen.insert(native).second) continue;
    lexicon.Add(native, cipher.Apply(native), 1);
  }
  return lexicon;
}

}  // namespace testing
}  // namespace translit

#endif  // TRANSLIT_TESTS_TEST_UTIL_H_
