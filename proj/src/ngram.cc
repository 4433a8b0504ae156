// ngram.cc
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

#include "translit/ngram.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <set>

#include "translit/util.h"

namespace translit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn10 = 2.302585092994045684;
// Conventional ARPA placeholder for the unpredicted begin marker.
constexpr double kBosPlaceholderLog10 = -99.0;

const std::string kBosName = "<s>";
const std::string kEosName = "</s>";

}  // namespace

TokenId NGramModel::TokenOf(const PairSymbol &pair) const {
  auto it = token_ids_.find(pair);
  return it == token_ids_.end() ? kNoToken : it->second;
}

const PairSymbol &NGramModel::PairOf(TokenId token) const {
  if (token < 2 || token >= static_cast<TokenId>(vocab_.size()) + 2) {
    throw Error("PairOf: not a pair-symbol token: " + std::to_string(token));
  }
  return vocab_[token - 2];
}

std::string NGramModel::TokenName(TokenId token) const {
  if (token == kBosToken) return kBosName;
  if (token == kEosToken) return kEosName;
  return ToString(PairOf(token));
}

NGramModel NGramModel::Train(
    const std::vector<std::pair<AlignedPair, double>> &sequences, int order) {
  if (sequences.empty()) throw BuildError("Train: no sequences");
  if (order < 1) throw BuildError("Train: order must be >= 1");

  NGramModel model;
  model.order_ = order;

  std::set<PairSymbol> vocab_set;
  for (const auto &[aligned, count] : sequences) {
    if (count <= 0.0) throw BuildError("Train: nonpositive sequence count");
    for (const PairSymbol &pair : aligned.pairs) vocab_set.insert(pair);
  }
  model.vocab_.assign(vocab_set.begin(), vocab_set.end());
  for (size_t i = 0; i < model.vocab_.size(); ++i) {
    model.token_ids_[model.vocab_[i]] = static_cast<TokenId>(i) + 2;
  }

  // Raw counts for every gram length up to the order. The gram ending at
  // the begin marker is never an event.
  std::map<Gram, double> counts;
  for (const auto &[aligned, count] : sequences) {
    std::vector<TokenId> tokens;
    tokens.reserve(aligned.pairs.size() + 2);
    tokens.push_back(kBosToken);
    for (const PairSymbol &pair : aligned.pairs) {
      tokens.push_back(model.token_ids_.at(pair));
    }
    tokens.push_back(kEosToken);
    for (size_t p = 1; p < tokens.size(); ++p) {
      for (int k = 1; k <= order && static_cast<size_t>(k) <= p + 1; ++k) {
        Gram gram(tokens.begin() + (p + 1 - k), tokens.begin() + (p + 1));
        counts[gram] += count;
      }
    }
  }

  // Interpolated Witten-Bell, lowest order first:
  //   P(w|h) = (c(h,w) + T(h) P(w|h')) / (n(h) + T(h))
  //   bow(h) = T(h) / (n(h) + T(h))
  // with a uniform base distribution under the unigrams.
  double uniform = 1.0 / static_cast<double>(model.vocab_.size() + 1);
  for (int k = 1; k <= order; ++k) {
    struct ContextStats {
      double total = 0.0;
      int distinct = 0;
    };
    std::map<Gram, ContextStats> contexts;
    for (const auto &[gram, count] : counts) {
      if (static_cast<int>(gram.size()) != k) continue;
      Gram context(gram.begin(), gram.end() - 1);
      ContextStats &stats = contexts[context];
      stats.total += count;
      stats.distinct += 1;
    }
    for (const auto &[context, stats] : contexts) {
      if (!context.empty()) {
        model.backoff_[context] =
            std::log(stats.distinct / (stats.total + stats.distinct));
      }
    }
    for (const auto &[gram, count] : counts) {
      if (static_cast<int>(gram.size()) != k) continue;
      Gram context(gram.begin(), gram.end() - 1);
      const ContextStats &stats = contexts.at(context);
      TokenId w = gram.back();
      double lower;
      if (context.empty()) {
        lower = uniform;
      } else {
        std::span<const TokenId> suffix(context.data() + 1,
                                        context.size() - 1);
        lower = std::exp(model.CondLogProb(suffix, w));
      }
      double prob =
          (count + stats.distinct * lower) / (stats.total + stats.distinct);
      model.logprob_[gram] = std::log(prob);
    }
  }
  return model;
}

double NGramModel::CondLogProb(std::span<const TokenId> context,
                               TokenId token) const {
  if (token == kNoToken || token == kBosToken) return kNegInf;
  if (static_cast<int>(context.size()) > order_ - 1) {
    context = context.subspan(context.size() - (order_ - 1));
  }
  double acc = 0.0;
  while (true) {
    Gram gram(context.begin(), context.end());
    gram.push_back(token);
    auto it = logprob_.find(gram);
    if (it != logprob_.end()) return acc + it->second;
    if (context.empty()) return kNegInf;
    Gram ctx(context.begin(), context.end());
    auto bo = backoff_.find(ctx);
    if (bo != backoff_.end()) acc += bo->second;
    context = context.subspan(1);
  }
}

double NGramModel::ScoreSequence(const std::vector<PairSymbol> &pairs) const {
  std::vector<TokenId> tokens;
  tokens.reserve(pairs.size() + 2);
  tokens.push_back(kBosToken);
  for (const PairSymbol &pair : pairs) {
    TokenId token = TokenOf(pair);
    if (token == kNoToken) return kNegInf;
    tokens.push_back(token);
  }
  tokens.push_back(kEosToken);
  double total = 0.0;
  for (size_t p = 1; p < tokens.size(); ++p) {
    size_t begin = p > static_cast<size_t>(order_ - 1)
                       ? p - static_cast<size_t>(order_ - 1)
                       : 0;
    std::span<const TokenId> context(tokens.data() + begin, p - begin);
    total += CondLogProb(context, tokens[p]);
  }
  return total;
}

std::vector<std::vector<TokenId>> NGramModel::StoredContexts() const {
  std::set<Gram> contexts;
  contexts.insert(Gram{});
  for (const auto &[gram, lp] : logprob_) {
    contexts.insert(Gram(gram.begin(), gram.end() - 1));
  }
  return {contexts.begin(), contexts.end()};
}

Fst NGramModel::ToFst(std::shared_ptr<const SymbolTable> isyms,
                      std::shared_ptr<const SymbolTable> osyms) const {
  auto side_label = [](const std::string &side,
                       const std::shared_ptr<const SymbolTable> &syms) {
    if (side.empty()) return kEpsilon;
    Label label = syms->Find(side);
    if (label == kNoLabel) {
      throw Error("ToFst: unresolvable grapheme \"" + side + "\"");
    }
    return label;
  };

  // One state per stored context; ids follow the sorted context order.
  std::map<Gram, StateId> states;
  for (const auto &context : StoredContexts()) states[context] = kNoStateId;

  Fst fst;
  fst.SetInputSymbols(isyms);
  fst.SetOutputSymbols(osyms);
  for (auto &[context, id] : states) id = fst.AddState();

  // Longest suffix of `tokens` that is a stored context.
  auto suffix_state = [&states](Gram tokens) {
    while (!states.count(tokens)) tokens.erase(tokens.begin());
    return states.at(tokens);
  };

  Gram bos_context{kBosToken};
  fst.SetStart(states.count(bos_context) ? states.at(bos_context)
                                         : states.at(Gram{}));

  for (const auto &[gram, lp] : logprob_) {
    Gram context(gram.begin(), gram.end() - 1);
    TokenId w = gram.back();
    StateId src = states.at(context);
    if (w == kEosToken) {
      fst.SetFinal(src, Weight(-lp));
      continue;
    }
    const PairSymbol &pair = PairOf(w);
    Gram next(context);
    next.push_back(w);
    if (static_cast<int>(next.size()) > order_ - 1 && !next.empty()) {
      next.erase(next.begin());
    }
    fst.AddArc(src, Arc{side_label(pair.input, isyms),
                        side_label(pair.output, osyms), Weight(-lp),
                        suffix_state(std::move(next))});
  }
  for (const auto &[context, bow] : backoff_) {
    if (!states.count(context)) continue;
    Gram lower(context.begin() + 1, context.end());
    fst.AddArc(states.at(context),
               Arc{kEpsilon, kEpsilon, Weight(-bow), suffix_state(lower)});
  }
  return fst;
}

void NGramModel::WriteArpa(std::ostream &out) const {
  std::vector<std::map<Gram, double>> by_order(order_ + 1);
  for (const auto &[gram, lp] : logprob_) {
    by_order[gram.size()][gram] = lp;
  }
  // The begin marker appears as a unigram entry so its backoff weight
  // has somewhere to live.
  bool bos_entry = backoff_.count(Gram{kBosToken}) > 0;

  out << "\\data\\\n";
  for (int k = 1; k <= order_; ++k) {
    size_t count = by_order[k].size() + (k == 1 && bos_entry ? 1 : 0);
    out << "ngram " << k << "=" << count << "\n";
  }
  auto write_gram = [&](const Gram &gram, double log10prob) {
    out << FormatDouble(log10prob) << '\t';
    for (size_t i = 0; i < gram.size(); ++i) {
      if (i > 0) out << ' ';
      out << TokenName(gram[i]);
    }
    auto bo = backoff_.find(gram);
    if (bo != backoff_.end()) out << '\t' << FormatDouble(bo->second / kLn10);
    out << '\n';
  };
  for (int k = 1; k <= order_; ++k) {
    out << "\n\\" << k << "-grams:\n";
    if (k == 1 && bos_entry) {
      write_gram(Gram{kBosToken}, kBosPlaceholderLog10);
    }
    for (const auto &[gram, lp] : by_order[k]) {
      write_gram(gram, lp / kLn10);
    }
  }
  out << "\n\\end\\\n";
}

NGramModel NGramModel::ReadArpa(std::istream &in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::string *out_line) {
    if (!std::getline(in, *out_line)) return false;
    ++lineno;
    return true;
  };
  auto fail = [&](const std::string &msg) -> void {
    throw ParseError("arpa line " + std::to_string(lineno) + ": " + msg);
  };

  while (next_line(&line) && line != "\\data\\") {
  }
  if (line != "\\data\\") throw ParseError("arpa: missing \\data\\ header");

  std::vector<std::pair<int, long long>> declared;
  while (next_line(&line)) {
    if (line.empty()) break;
    if (line.rfind("ngram ", 0) != 0) fail("expected ngram k=count");
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected ngram k=count");
    declared.emplace_back(
        static_cast<int>(ParseCount(line.substr(6, eq - 6))),
        ParseCount(line.substr(eq + 1)));
  }
  if (declared.empty()) throw ParseError("arpa: empty \\data\\ section");

  struct RawGram {
    std::vector<std::string> names;
    double log10prob;
    bool has_backoff;
    double log10backoff;
  };
  std::vector<RawGram> grams;
  int order = 0;
  for (const auto &[k, unused] : declared) order = std::max(order, k);

  while (next_line(&line)) {
    if (line.empty()) continue;
    if (line == "\\end\\") break;
    if (line.front() == '\\') continue;  // section header
    auto fields = Split(line, '\t');
    if (fields.size() != 2 && fields.size() != 3) {
      fail("expected logprob<TAB>symbols[<TAB>backoff]");
    }
    RawGram raw;
    raw.log10prob = ParseDouble(fields[0]);
    for (const std::string &name : Split(fields[1], ' ')) {
      if (!name.empty()) raw.names.push_back(name);
    }
    if (raw.names.empty()) fail("empty n-gram");
    raw.has_backoff = fields.size() == 3;
    raw.log10backoff = raw.has_backoff ? ParseDouble(fields[2]) : 0.0;
    grams.push_back(std::move(raw));
  }

  NGramModel model;
  model.order_ = order;
  std::set<PairSymbol> vocab_set;
  for (const RawGram &raw : grams) {
    for (const std::string &name : raw.names) {
      if (name != kBosName && name != kEosName) {
        vocab_set.insert(PairSymbolFromString(name));
      }
    }
  }
  model.vocab_.assign(vocab_set.begin(), vocab_set.end());
  for (size_t i = 0; i < model.vocab_.size(); ++i) {
    model.token_ids_[model.vocab_[i]] = static_cast<TokenId>(i) + 2;
  }
  auto token_of = [&model, &fail](const std::string &name) -> TokenId {
    if (name == kBosName) return kBosToken;
    if (name == kEosName) return kEosToken;
    auto it = model.token_ids_.find(PairSymbolFromString(name));
    if (it == model.token_ids_.end()) fail("unknown token " + name);
    return it == model.token_ids_.end() ? kNoToken : it->second;
  };
  for (const RawGram &raw : grams) {
    Gram gram;
    gram.reserve(raw.names.size());
    for (const std::string &name : raw.names) gram.push_back(token_of(name));
    bool bos_placeholder = gram.size() == 1 && gram[0] == kBosToken;
    if (!bos_placeholder) {
      model.logprob_[gram] = raw.log10prob * kLn10;
    }
    if (raw.has_backoff) {
      model.backoff_[gram] = raw.log10backoff * kLn10;
    }
  }
  return model;
}

}  // namespace translit
