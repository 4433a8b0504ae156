// ngram.h
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
// Backoff n-gram model over pair-symbol sequences (interpolated
// Witten-Bell smoothing) and its compilation into a WFST whose arcs
// carry the split input/output labels. The model is a joint distribution
// over input/output strings, so one model serves both directions.

#ifndef TRANSLIT_NGRAM_H_
#define TRANSLIT_NGRAM_H_

#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "translit/fst.h"
#include "translit/pair-align.h"

namespace translit {

using TokenId = int32_t;

class NGramModel {
 public:
  static constexpr TokenId kBosToken = 0;  // sentence begin, contexts only
  static constexpr TokenId kEosToken = 1;  // sentence end
  static constexpr TokenId kNoToken = -1;

  // Counts n-grams of every order up to `order` over the pair sequences
  // (weighted by count, padded with one begin and one end marker) and
  // smooths them with interpolated Witten-Bell. Throws BuildError on
  // empty input, nonpositive order, or nonpositive counts.
  static NGramModel Train(
      const std::vector<std::pair<AlignedPair, double>> &sequences, int order);

  int Order() const { return order_; }
  const std::vector<PairSymbol> &Vocab() const { return vocab_; }

  TokenId TokenOf(const PairSymbol &pair) const;
  const PairSymbol &PairOf(TokenId token) const;  // token must be >= 2
  std::string TokenName(TokenId token) const;

  // Conditional log-probability (natural log) with recursive backoff;
  // the context is used longest-first and truncated to order-1 tokens.
  double CondLogProb(std::span<const TokenId> context, TokenId token) const;

  // Joint log-probability of the padded sequence; -inf if any pair is
  // outside the vocabulary.
  double ScoreSequence(const std::vector<PairSymbol> &pairs) const;

  // Every stored context (as token sequences), for normalization checks.
  std::vector<std::vector<TokenId>> StoredContexts() const;

  // N-gram transducer: one state per stored context, explicit n-gram arcs
  // labeled input-side:output-side with weight -log P, epsilon backoff
  // arcs with weight -log bow, end-of-sequence as final weights. Every
  // vocabulary grapheme must resolve in the given tables.
  Fst ToFst(std::shared_ptr<const SymbolTable> isyms,
            std::shared_ptr<const SymbolTable> osyms) const;

  // ARPA-style text: log base 10 in the file, natural log internally.
  void WriteArpa(std::ostream &out) const;
  static NGramModel ReadArpa(std::istream &in);

 private:
  using Gram = std::vector<TokenId>;

  int order_ = 0;
  std::vector<PairSymbol> vocab_;             // sorted; token id = index + 2
  std::map<PairSymbol, TokenId> token_ids_;
  std::map<Gram, double> logprob_;            // context + predicted token
  std::map<Gram, double> backoff_;            // log backoff weight per context
};

}  // namespace translit

#endif  // TRANSLIT_NGRAM_H_
