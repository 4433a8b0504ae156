// transliterator.h
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
// End-to-end transliterators: EM alignment -> pair n-gram model -> WFST,
// k-best decoding, direction reversal, and the union of per-language
// machines into one many-to-one transducer.

#ifndef TRANSLIT_TRANSLITERATOR_H_
#define TRANSLIT_TRANSLITERATOR_H_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "translit/fst.h"
#include "translit/lexicon.h"
#include "translit/ngram.h"
#include "translit/pair-align.h"

namespace translit {

struct Transliterator {
  std::string language;
  AlignmentModel align_model;
  NGramModel lm;
  Fst fwd_fst;  // input side native, output side Latin
  std::shared_ptr<const SymbolTable> native_syms;
  std::shared_ptr<const SymbolTable> latin_syms;
  int order = 6;
  int em_iters = 10;
  double em_tol = 1e-6;
};

struct BuildOptions {
  int order = 6;
  int em_iters = 10;
  double em_tol = 1e-6;
  bool parallel = true;
  bool quiet = false;  // suppress skipped-entry warnings on stderr
};

// Full pipeline over a lexicon: EM alignment training, Viterbi alignment
// of every entry, n-gram training, FST compilation. Unalignable entries
// are skipped with a warning; throws BuildError if the lexicon is empty
// or nothing aligns.
Transliterator BuildTransliterator(const Lexicon &lexicon,
                                   const BuildOptions &options = {});

struct Candidate {
  std::string text;
  double weight;
};

struct TransliterationResult {
  std::vector<Candidate> candidates;  // nondecreasing weight, distinct texts
  bool untransliterable() const { return candidates.empty(); }
};

// K-best outputs of `word` through a machine with attached symbol tables.
// Throws ParseError listing the codepoints missing from the input table.
TransliterationResult TransliterateWord(const Fst &machine,
                                        const std::string &word, int k);

inline TransliterationResult Transliterate(const Transliterator &t,
                                           const std::string &word, int k) {
  return TransliterateWord(t.fwd_fst, word, k);
}

// Same joint model, opposite direction: inverted machine, swapped tables.
Transliterator Reverse(const Transliterator &t);

// Union machine over per-language transducers: a fresh start state with
// free epsilon arcs into each member, arcs relabeled into merged symbol
// tables. Native scripts occupy disjoint unicode blocks, so members keep
// their own weights and languages do not interact.
Fst BuildUnion(const std::vector<Transliterator> &members);

// Bundle directory layout: alignment.tsv, model.arpa, model.fst,
// native.syms, latin.syms, manifest.
void SaveBundle(const Transliterator &t, const std::filesystem::path &dir,
                bool with_timestamp);
Transliterator LoadBundle(const std::filesystem::path &dir);

}  // namespace translit

#endif  // TRANSLIT_TRANSLITERATOR_H_
