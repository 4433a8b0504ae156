// pair-align.h
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
// Expectation-maximization training of a monotone codepoint-to-codepoint
// alignment model over native/Latin word pairs, plus Viterbi extraction
// of pair-symbol sequences. Moves are limited to 1:1 (match), 1:0
// (deletion) and 0:1 (insertion) codepoint pairs.

#ifndef TRANSLIT_PAIR_ALIGN_H_
#define TRANSLIT_PAIR_ALIGN_H_

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "translit/util.h"

namespace translit {

// Epsilon marker used wherever a pair-symbol side is written out.
inline constexpr const char *kEpsilonToken = "<eps>";

// One alignment unit: an input codepoint paired with an output codepoint,
// either side possibly empty (never both).
struct PairSymbol {
  std::string input;   // UTF-8 of one codepoint, or empty
  std::string output;  // UTF-8 of one codepoint, or empty

  friend auto operator<=>(const PairSymbol &, const PairSymbol &) = default;
};

// "a:x" with <eps> standing in for an empty side.
std::string ToString(const PairSymbol &pair);
PairSymbol PairSymbolFromString(std::string_view token);

struct LexEntry {
  std::string native;
  std::string latin;
  double count = 1.0;
};

class AlignmentModel {
 public:
  double Prob(const PairSymbol &pair) const;  // 0 when absent
  void Set(const PairSymbol &pair, double prob);
  const std::map<PairSymbol, double> &probs() const { return probs_; }
  double TotalMass() const;

  // TSV: input<TAB>output<TAB>probability, epsilon as <eps>.
  void Write(std::ostream &out) const;
  static AlignmentModel Read(std::istream &in);

 private:
  std::map<PairSymbol, double> probs_;
};

struct AlignedPair {
  std::string native_word;
  std::string latin_word;
  std::vector<PairSymbol> pairs;
};

// Expected pair counts and data log-likelihood of one E-step.
struct EStepStats {
  std::map<PairSymbol, double> counts;
  double log_likelihood = 0.0;
  int skipped_entries = 0;  // entries whose posterior mass underflowed
};

// OpenMP-parallel E-step; per-entry expectations are accumulated into
// per-thread maps and merged in thread order.
EStepStats ExpectationCounts(const AlignmentModel &model,
                             const std::vector<LexEntry> &entries);
// Serial reference implementation; must agree with the parallel kernel
// to within floating-point summation tolerance.
EStepStats ExpectationCountsSerial(const AlignmentModel &model,
                                   const std::vector<LexEntry> &entries);

struct EmOptions {
  int max_iters = 10;
  double tol = 1e-6;       // stop when log-likelihood gain drops below this
  bool parallel = true;
  // Invoked after every M-step with (iteration, model, log-likelihood).
  std::function<void(int, const AlignmentModel &, double)> observer;
};

struct EmResult {
  AlignmentModel model;
  std::vector<double> log_likelihoods;  // one entry per iteration
  int skipped_entries = 0;              // from the final iteration
};

// Throws BuildError on an empty entry list or an entry with an empty pair
// of words (both sides empty / zero codepoints on both sides).
EmResult EmTrain(const std::vector<LexEntry> &entries,
                 const EmOptions &options = {});

class UnalignableError : public Error {
 public:
  explicit UnalignableError(const std::string &msg) : Error(msg) {}
};

// Maximum-probability monotone alignment; ties prefer match over deletion
// over insertion. Throws UnalignableError when no alignment has nonzero
// probability.
AlignedPair ViterbiAlign(const AlignmentModel &model,
                         const std::string &native_word,
                         const std::string &latin_word);

// log of the summed probability of all monotone alignments
// (-inf when unalignable).
double AlignmentLikelihood(const AlignmentModel &model,
                           const std::string &native_word,
                           const std::string &latin_word);

}  // namespace translit

#endif  // TRANSLIT_PAIR_ALIGN_H_
