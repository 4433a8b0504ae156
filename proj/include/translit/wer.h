// wer.h
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
// Word error rate via minimum-edit alignment, and the
// transliteration-optimized variant: each token expands to a candidate
// set (its lowercased surface plus, for native-script tokens, the k-best
// Latin transliterations) and two tokens count as equal when their sets
// intersect. Script and romanization variants of one word therefore stop
// counting as errors.

#ifndef TRANSLIT_WER_H_
#define TRANSLIT_WER_H_

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "translit/fst.h"

namespace translit {

enum class EditOp { kMatch, kSub, kDel, kIns };

struct AlignStep {
  EditOp op;
  int ref_index = -1;  // -1 for insertions
  int hyp_index = -1;  // -1 for deletions
};

struct WerReport {
  int64_t substitutions = 0;
  int64_t insertions = 0;
  int64_t deletions = 0;
  int64_t matches = 0;
  int64_t ref_words = 0;

  int64_t errors() const { return substitutions + insertions + deletions; }
  double wer() const {
    return static_cast<double>(errors()) / static_cast<double>(ref_words);
  }
  void Merge(const WerReport &other);
};

using TokenEqual =
    std::function<bool(const std::string &, const std::string &)>;

// Minimum-edit alignment with unit costs; among minimal alignments the
// backtrace prefers substitution over deletion over insertion. Throws
// ParseError on an empty reference.
std::pair<std::vector<AlignStep>, WerReport> EditAlign(
    const std::vector<std::string> &ref, const std::vector<std::string> &hyp,
    const TokenEqual &equal);

// Exact string equality.
WerReport Wer(const std::vector<std::string> &ref,
              const std::vector<std::string> &hyp);

// Candidate sets for the relaxed equality relation, memoized per token.
// Populate() precomputes tokens so Equal() is read-only afterwards and
// safe to call from parallel scoring loops.
class TranslitEquivalence {
 public:
  // many_to_one may be null, in which case only the lowercased surface
  // form is used (the relation degenerates to case-insensitive equality).
  TranslitEquivalence(const Fst *many_to_one, int k);

  void Populate(const std::vector<std::string> &tokens);
  const std::vector<std::string> &Candidates(const std::string &token);
  bool Equal(const std::string &a, const std::string &b) const;

  int k() const { return k_; }

 private:
  const Fst *machine_;
  int k_;
  std::unordered_map<std::string, std::vector<std::string>> cache_;
};

WerReport TranslitOptimizedWer(const std::vector<std::string> &ref,
                               const std::vector<std::string> &hyp,
                               TranslitEquivalence *equivalence);

struct Utterance {
  std::string id;
  std::vector<std::string> ref;
  std::vector<std::string> hyp;
};

struct CorpusScore {
  WerReport total;
  std::vector<WerReport> per_utterance;  // parallel to the input
};

// OpenMP-parallel corpus scoring; candidate sets are populated up front
// so the parallel region only reads. Serial reference kept for testing.
CorpusScore ScoreCorpus(const std::vector<Utterance> &utterances,
                        TranslitEquivalence *equivalence);
CorpusScore ScoreCorpusSerial(const std::vector<Utterance> &utterances,
                              TranslitEquivalence *equivalence);

}  // namespace translit

#endif  // TRANSLIT_WER_H_
