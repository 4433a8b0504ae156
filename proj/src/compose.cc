// compose.cc
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

#include <map>
#include <tuple>
#include <vector>

#include "translit/fst.h"
#include "translit/util.h"

namespace translit {

namespace {

// Filter states of the epsilon-sequencing filter. From kFree either side
// may move alone on its epsilon, or both may pair up; once a side has
// moved alone, the other side's lone epsilon moves are blocked until a
// real match. This keeps exactly one representative of every epsilon
// interleaving between matches.
enum FilterState : int { kFree = 0, kAOnly = 1, kBOnly = 2 };

using ComposedKey = std::tuple<StateId, StateId, int>;

}  // namespace

Fst Compose(const Fst &a, const Fst &b) {
  if (a.OutputSymbols() && b.InputSymbols() &&
      !(*a.OutputSymbols() == *b.InputSymbols())) {
    throw Error("Compose: output/input symbol tables differ");
  }
  Fst out;
  out.SetInputSymbols(a.InputSymbols());
  out.SetOutputSymbols(b.OutputSymbols());
  if (a.Empty() || b.Empty()) return out;

  std::map<ComposedKey, StateId> ids;
  std::vector<ComposedKey> order;
  auto intern = [&](StateId sa, StateId sb, int f) {
    ComposedKey key{sa, sb, f};
    auto [it, inserted] = ids.emplace(key, out.NumStates());
    if (inserted) {
      out.AddState();
      order.push_back(key);
    }
    return it->second;
  };

  StateId start = intern(a.Start(), b.Start(), kFree);
  out.SetStart(start);

  for (size_t next = 0; next < order.size(); ++next) {
    auto [sa, sb, f] = order[next];
    StateId s = ids.at(order[next]);
    out.SetFinal(s, Times(a.Final(sa), b.Final(sb)));
    for (const Arc &arc_a : a.Arcs(sa)) {
      if (arc_a.olabel == kEpsilon) {
        // A moves alone.
        if (f != kBOnly) {
          out.AddArc(s, Arc{arc_a.ilabel, kEpsilon, arc_a.weight,
                            intern(arc_a.nextstate, sb, kAOnly)});
        }
        // A and B pair their epsilons.
        if (f == kFree) {
          for (const Arc &arc_b : b.Arcs(sb)) {
            if (arc_b.ilabel != kEpsilon) continue;
            out.AddArc(s, Arc{arc_a.ilabel, arc_b.olabel,
                              Times(arc_a.weight, arc_b.weight),
                              intern(arc_a.nextstate, arc_b.nextstate, kFree)});
          }
        }
        continue;
      }
      // Real match.
      for (const Arc &arc_b : b.Arcs(sb)) {
        if (arc_b.ilabel != arc_a.olabel) continue;
        out.AddArc(s, Arc{arc_a.ilabel, arc_b.olabel,
                          Times(arc_a.weight, arc_b.weight),
                          intern(arc_a.nextstate, arc_b.nextstate, kFree)});
      }
    }
    // B moves alone.
    if (f != kAOnly) {
      for (const Arc &arc_b : b.Arcs(sb)) {
        if (arc_b.ilabel != kEpsilon) continue;
        out.AddArc(s, Arc{kEpsilon, arc_b.olabel, arc_b.weight,
                          intern(sa, arc_b.nextstate, kBOnly)});
      }
    }
  }
  return out;
}

}  // namespace translit
