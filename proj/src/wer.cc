// wer.cc
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

#include "translit/wer.h"

#include <algorithm>

#include "translit/script.h"
#include "translit/transliterator.h"
#include "translit/util.h"

namespace translit {

void WerReport::Merge(const WerReport &other) {
  substitutions += other.substitutions;
  insertions += other.insertions;
  deletions += other.deletions;
  matches += other.matches;
  ref_words += other.ref_words;
}

std::pair<std::vector<AlignStep>, WerReport> EditAlign(
    const std::vector<std::string> &ref, const std::vector<std::string> &hyp,
    const TokenEqual &equal) {
  if (ref.empty()) {
    throw ParseError("EditAlign: empty reference (WER undefined)");
  }
  int nr = static_cast<int>(ref.size());
  int nh = static_cast<int>(hyp.size());
  auto idx = [nh](int i, int j) {
    return static_cast<size_t>(i) * (nh + 1) + j;
  };
  std::vector<int32_t> cost(static_cast<size_t>(nr + 1) * (nh + 1));
  // Moves into (i,j): 1 diagonal (match/sub), 2 deletion, 3 insertion.
  // Candidates are tried in that order; strict improvement replaces, so
  // ties settle in the preferred order.
  std::vector<int8_t> back(static_cast<size_t>(nr + 1) * (nh + 1), 0);
  for (int i = 0; i <= nr; ++i) cost[idx(i, 0)] = i;
  for (int j = 0; j <= nh; ++j) cost[idx(0, j)] = j;
  for (int i = 1; i <= nr; ++i) back[idx(i, 0)] = 2;
  for (int j = 1; j <= nh; ++j) back[idx(0, j)] = 3;
  for (int i = 1; i <= nr; ++i) {
    for (int j = 1; j <= nh; ++j) {
      bool eq = equal(ref[i - 1], hyp[j - 1]);
      int32_t best = cost[idx(i - 1, j - 1)] + (eq ? 0 : 1);
      int8_t move = 1;
      if (cost[idx(i - 1, j)] + 1 < best) {
        best = cost[idx(i - 1, j)] + 1;
        move = 2;
      }
      if (cost[idx(i, j - 1)] + 1 < best) {
        best = cost[idx(i, j - 1)] + 1;
        move = 3;
      }
      cost[idx(i, j)] = best;
      back[idx(i, j)] = move;
    }
  }

  std::vector<AlignStep> alignment;
  WerReport report;
  report.ref_words = nr;
  int i = nr, j = nh;
  while (i > 0 || j > 0) {
    switch (back[idx(i, j)]) {
      case 1: {
        bool eq = cost[idx(i, j)] == cost[idx(i - 1, j - 1)];
        alignment.push_back(
            AlignStep{eq ? EditOp::kMatch : EditOp::kSub, i - 1, j - 1});
        if (eq) {
          report.matches += 1;
        } else {
          report.substitutions += 1;
        }
        --i;
        --j;
        break;
      }
      case 2:
        alignment.push_back(AlignStep{EditOp::kDel, i - 1, -1});
        report.deletions += 1;
        --i;
        break;
      case 3:
        alignment.push_back(AlignStep{EditOp::kIns, -1, j - 1});
        report.insertions += 1;
        --j;
        break;
      default:
        throw Error("EditAlign: corrupt backtrace");
    }
  }
  std::reverse(alignment.begin(), alignment.end());
  return {std::move(alignment), report};
}

WerReport Wer(const std::vector<std::string> &ref,
              const std::vector<std::string> &hyp) {
  return EditAlign(ref, hyp,
                   [](const std::string &a, const std::string &b) {
                     return a == b;
                   })
      .second;
}

TranslitEquivalence::TranslitEquivalence(const Fst *many_to_one, int k)
    : machine_(many_to_one), k_(k) {}

const std::vector<std::string> &TranslitEquivalence::Candidates(
    const std::string &token) {
  auto it = cache_.find(token);
  if (it != cache_.end()) return it->second;

  std::vector<std::string> candidates;
  candidates.push_back(AsciiLower(token));
  if (machine_ && IsNativeScript(DetectScript(token))) {
    try {
      for (const Candidate &cand : TransliterateWord(*machine_, token, k_)
                                       .candidates) {
        candidates.push_back(cand.text);
      }
    } catch (const Error &) {
      // Tokens outside the machine's alphabet keep only their surface.
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  return cache_.emplace(token, std::move(candidates)).first->second;
}

void TranslitEquivalence::Populate(const std::vector<std::string> &tokens) {
  for (const std::string &token : tokens) Candidates(token);
}

bool TranslitEquivalence::Equal(const std::string &a,
                                const std::string &b) const {
  auto ia = cache_.find(a);
  auto ib = cache_.find(b);
  if (ia == cache_.end() || ib == cache_.end()) {
    throw Error("TranslitEquivalence: token not populated");
  }
  const auto &ca = ia->second;
  const auto &cb = ib->second;
  // Sorted-set intersection test.
  size_t x = 0, y = 0;
  while (x < ca.size() && y < cb.size()) {
    int cmp = ca[x].compare(cb[y]);
    if (cmp == 0) return true;
    if (cmp < 0) {
      ++x;
    } else {
      ++y;
    }
  }
  return false;
}

WerReport TranslitOptimizedWer(const std::vector<std::string> &ref,
                               const std::vector<std::string> &hyp,
                               TranslitEquivalence *equivalence) {
  equivalence->Populate(ref);
  equivalence->Populate(hyp);
  const TranslitEquivalence *eq = equivalence;
  return EditAlign(ref, hyp,
                   [eq](const std::string &a, const std::string &b) {
                     return eq->Equal(a, b);
                   })
      .second;
}

namespace {

CorpusScore ScoreCorpusImpl(const std::vector<Utterance> &utterances,
                            TranslitEquivalence *equivalence, bool parallel) {
  for (const Utterance &utt : utterances) {
    equivalence->Populate(utt.ref);
    equivalence->Populate(utt.hyp);
  }
  const TranslitEquivalence *eq = equivalence;
  TokenEqual token_equal = [eq](const std::string &a, const std::string &b) {
    return eq->Equal(a, b);
  };

  int n = static_cast<int>(utterances.size());
  CorpusScore score;
  score.per_utterance.resize(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
  for (int i = 0; i < n; ++i) {
    score.per_utterance[i] =
        EditAlign(utterances[i].ref, utterances[i].hyp, token_equal).second;
  }
  (void)parallel;
  for (const WerReport &report : score.per_utterance) {
    score.total.Merge(report);
  }
  return score;
}

}  // namespace

CorpusScore ScoreCorpus(const std::vector<Utterance> &utterances,
                        TranslitEquivalence *equivalence) {
  return ScoreCorpusImpl(utterances, equivalence, true);
}

CorpusScore ScoreCorpusSerial(const std::vector<Utterance> &utterances,
                              TranslitEquivalence *equivalence) {
  return ScoreCorpusImpl(utterances, equivalence, false);
}

}  // namespace translit
