// fst.h
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
// Weighted finite-state transducers over the tropical semiring, with the
// algorithms the transliteration pipeline needs: linear acceptors,
// inversion, composition with an epsilon-sequencing filter, trimming,
// and n-best shortest paths. Machines are immutable once built; every
// algorithm returns a new machine, so concurrent reads are safe.

#ifndef TRANSLIT_FST_H_
#define TRANSLIT_FST_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace translit {

using StateId = int32_t;
using Label = int32_t;

inline constexpr StateId kNoStateId = -1;
inline constexpr Label kNoLabel = -1;
inline constexpr Label kEpsilon = 0;

// Tropical weight: Plus is min, Times is +, Zero is +inf, One is 0.
struct Weight {
  double value = std::numeric_limits<double>::infinity();

  Weight() = default;
  explicit constexpr Weight(double v) : value(v) {}

  static constexpr Weight Zero() {
    return Weight(std::numeric_limits<double>::infinity());
  }
  static constexpr Weight One() { return Weight(0.0); }

  bool IsZero() const { return value == Zero().value; }
  friend bool operator==(const Weight &a, const Weight &b) {
    return a.value == b.value;
  }
};

inline Weight Plus(Weight a, Weight b) {
  return a.value <= b.value ? a : b;
}
inline Weight Times(Weight a, Weight b) {
  if (a.IsZero() || b.IsZero()) return Weight::Zero();
  return Weight(a.value + b.value);
}

// Bijective map between symbol strings and dense label ids.
// Id 0 is reserved for the epsilon marker and never holds a user symbol.
class SymbolTable {
 public:
  explicit SymbolTable(std::string epsilon = "<eps>");

  // Returns the symbol's id, adding it if absent.
  Label AddSymbol(const std::string &symbol);
  // Adds with an explicit id (used by the file reader); the id must be
  // the next unused one.
  Label AddSymbol(const std::string &symbol, Label id);

  Label Find(std::string_view symbol) const;  // kNoLabel when absent
  const std::string &Symbol(Label id) const;  // throws on invalid id
  bool Contains(std::string_view symbol) const {
    return Find(symbol) != kNoLabel;
  }

  int64_t Size() const { return static_cast<int64_t>(symbols_.size()); }

  void Write(std::ostream &out) const;  // symbol<TAB>id per line
  static SymbolTable Read(std::istream &in);

  friend bool operator==(const SymbolTable &a, const SymbolTable &b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Label> ids_;
};

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  Weight weight = Weight::One();
  StateId nextstate = kNoStateId;
};

// Mutable during construction only; algorithms treat their inputs as const.
class Fst {
 public:
  Fst() = default;

  StateId AddState();
  void SetStart(StateId s);
  void SetFinal(StateId s, Weight w);
  void AddArc(StateId s, const Arc &arc);

  StateId Start() const { return start_; }
  StateId NumStates() const { return static_cast<StateId>(arcs_.size()); }
  int64_t NumArcs() const;
  bool Empty() const { return start_ == kNoStateId; }

  Weight Final(StateId s) const { return finals_[s]; }
  bool IsFinal(StateId s) const { return !finals_[s].IsZero(); }
  const std::vector<Arc> &Arcs(StateId s) const { return arcs_[s]; }

  const std::shared_ptr<const SymbolTable> &InputSymbols() const {
    return isyms_;
  }
  const std::shared_ptr<const SymbolTable> &OutputSymbols() const {
    return osyms_;
  }
  void SetInputSymbols(std::shared_ptr<const SymbolTable> syms) {
    isyms_ = std::move(syms);
  }
  void SetOutputSymbols(std::shared_ptr<const SymbolTable> syms) {
    osyms_ = std::move(syms);
  }

  // Checks state ids and, when symbol tables are attached, that every
  // arc label resolves. Throws Error on violation.
  void Validate() const;

 private:
  StateId start_ = kNoStateId;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<Weight> finals_;
  std::shared_ptr<const SymbolTable> isyms_;
  std::shared_ptr<const SymbolTable> osyms_;
};

// Chain acceptor for a symbol sequence: |symbols|+1 states, weight One
// everywhere, single final state. Throws ParseError naming the first
// symbol absent from the table.
Fst LinearAcceptor(const std::vector<std::string> &symbols,
                   std::shared_ptr<const SymbolTable> table);

// Identity transducer over a table: one state, x:x self loop of weight
// One for every non-epsilon symbol.
Fst IdentityTransducer(std::shared_ptr<const SymbolTable> table);

// Swaps input and output labels (and symbol tables); weights untouched.
Fst Invert(const Fst &fst);

// Composition with the three-state epsilon-sequencing filter, so a
// string/weight pair is produced by exactly one interleaving of
// epsilon moves. Requires a.OutputSymbols() == b.InputSymbols() when
// both are attached; throws Error on mismatch.
Fst Compose(const Fst &a, const Fst &b);

// Removes states that are not on some start-to-final path. May return
// an empty machine (no states) when the language is empty.
Fst Connect(const Fst &fst);

// One accepting path: labels concatenated into strings, epsilons dropped.
struct Path {
  std::string istring;
  std::string ostring;
  double weight = 0.0;
};

struct ShortestPathsOptions {
  bool unique_outputs = false;
  // Safety budget for the search; decodes in this toolkit use a tiny
  // fraction of it. Exceeding it throws Error.
  int64_t max_expansions = 8'000'000;
};

// Up to `nshortest` accepting paths in nondecreasing weight order, ties
// broken by output string then input string. With unique_outputs, at
// most one (the cheapest) path per distinct output string. Arc weights
// must be nonnegative unless the machine is acyclic.
std::vector<Path> ShortestPaths(const Fst &fst, int nshortest,
                                const ShortestPathsOptions &opts = {});

// Textual format: `src dst ilabel olabel weight` per arc and
// `state weight` per final state; the first line's src is the start
// state; labels are written as symbol strings.
void WriteFstText(const Fst &fst, std::ostream &out);
Fst ReadFstText(std::istream &in, std::shared_ptr<const SymbolTable> isyms,
                std::shared_ptr<const SymbolTable> osyms);

}  // namespace translit

#endif  // TRANSLIT_FST_H_
