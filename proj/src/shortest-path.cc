// shortest-path.cc
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
// N-best paths by A* over the path tree, using the exact distance-to-final
// as the heuristic. Completed paths therefore pop in nondecreasing total
// weight, which makes n-best (and cheapest-per-output deduplication)
// a matter of collecting pops until the cutoff weight is passed.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "translit/fst.h"
#include "translit/util.h"

namespace translit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Topological order of the original graph, or empty if cyclic.
std::vector<StateId> TopologicalOrder(const Fst &fst) {
  StateId n = fst.NumStates();
  std::vector<int64_t> indegree(n, 0);
  for (StateId s = 0; s < n; ++s) {
    for (const Arc &arc : fst.Arcs(s)) ++indegree[arc.nextstate];
  }
  std::vector<StateId> order;
  order.reserve(n);
  std::vector<StateId> frontier;
  for (StateId s = 0; s < n; ++s) {
    if (indegree[s] == 0) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    StateId s = frontier.back();
    frontier.pop_back();
    order.push_back(s);
    for (const Arc &arc : fst.Arcs(s)) {
      if (--indegree[arc.nextstate] == 0) frontier.push_back(arc.nextstate);
    }
  }
  if (static_cast<StateId>(order.size()) != n) order.clear();
  return order;
}

// Exact shortest distance from every state to acceptance (arc weights
// plus final weight). Acyclic machines use a DP that tolerates negative
// weights; cyclic machines use Dijkstra and require nonnegative weights.
std::vector<double> DistanceToFinal(const Fst &fst) {
  StateId n = fst.NumStates();
  std::vector<double> dist(n, kInf);
  std::vector<StateId> topo = TopologicalOrder(fst);
  if (!topo.empty()) {
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      StateId s = *it;
      double best = fst.Final(s).value;
      for (const Arc &arc : fst.Arcs(s)) {
        best = std::min(best, arc.weight.value + dist[arc.nextstate]);
      }
      dist[s] = best;
    }
    return dist;
  }

  for (StateId s = 0; s < n; ++s) {
    for (const Arc &arc : fst.Arcs(s)) {
      if (arc.weight.value < 0.0) {
        throw Error(
            "ShortestPaths: negative arc weight on a cyclic machine");
      }
    }
  }
  std::vector<std::vector<std::pair<StateId, double>>> rev(n);
  for (StateId s = 0; s < n; ++s) {
    for (const Arc &arc : fst.Arcs(s)) {
      rev[arc.nextstate].emplace_back(s, arc.weight.value);
    }
  }
  using QueueItem = std::pair<double, StateId>;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
  for (StateId s = 0; s < n; ++s) {
    if (fst.IsFinal(s)) {
      dist[s] = fst.Final(s).value;
      queue.emplace(dist[s], s);
    }
  }
  while (!queue.empty()) {
    auto [d, s] = queue.top();
    queue.pop();
    if (d > dist[s]) continue;
    for (auto [pred, w] : rev[s]) {
      double nd = d + w;
      if (nd < dist[pred]) {
        dist[pred] = nd;
        queue.emplace(nd, pred);
      }
    }
  }
  return dist;
}

struct SearchNode {
  StateId state;      // kNoStateId marks a completed path
  double cost;        // path weight so far (total weight when completed)
  int32_t parent;     // arena index, -1 at the root
  Label ilabel, olabel;
};

std::string LabelString(Label label,
                        const std::shared_ptr<const SymbolTable> &syms) {
  if (label == kEpsilon) return "";
  if (syms) return syms->Symbol(label);
  return "[" + std::to_string(label) + "]";
}

}  // namespace

std::vector<Path> ShortestPaths(const Fst &fst, int nshortest,
                                const ShortestPathsOptions &opts) {
  std::vector<Path> results;
  if (nshortest <= 0 || fst.Empty()) return results;
  std::vector<double> to_final = DistanceToFinal(fst);
  if (std::isinf(to_final[fst.Start()])) return results;  // empty language

  std::vector<SearchNode> arena;
  arena.push_back({fst.Start(), 0.0, -1, kEpsilon, kEpsilon});

  // (priority, arena index); priority = cost so far + distance to final.
  using QueueItem = std::pair<double, int32_t>;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
  queue.emplace(to_final[fst.Start()], 0);

  struct Candidate {
    double weight;
    std::string ostring;
    std::string istring;
  };
  std::vector<Candidate> candidates;
  std::set<std::string> distinct_outputs;
  double cutoff = kInf;

  auto rebuild = [&](int32_t index) {
    std::vector<const SearchNode *> chain;
    for (int32_t at = index; at >= 0; at = arena[at].parent) {
      chain.push_back(&arena[at]);
    }
    Candidate cand;
    cand.weight = arena[index].cost;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      cand.istring += LabelString((*it)->ilabel, fst.InputSymbols());
      cand.ostring += LabelString((*it)->olabel, fst.OutputSymbols());
    }
    return cand;
  };

  int64_t expansions = 0;
  while (!queue.empty()) {
    auto [priority, index] = queue.top();
    if (priority > cutoff) break;
    queue.pop();
    if (++expansions > opts.max_expansions) {
      throw Error("ShortestPaths: expansion budget exceeded");
    }
    SearchNode node = arena[index];

    if (node.state == kNoStateId) {  // completed path
      Candidate cand = rebuild(node.parent);
      cand.weight = node.cost;
      if (opts.unique_outputs) {
        distinct_outputs.insert(cand.ostring);
        if (static_cast<int>(distinct_outputs.size()) >= nshortest &&
            std::isinf(cutoff)) {
          cutoff = cand.weight;
        }
      } else if (static_cast<int>(candidates.size()) + 1 >= nshortest &&
                 std::isinf(cutoff)) {
        cutoff = cand.weight;
      }
      candidates.push_back(std::move(cand));
      continue;
    }

    if (fst.IsFinal(node.state)) {
      double total = node.cost + fst.Final(node.state).value;
      arena.push_back({kNoStateId, total, index, kEpsilon, kEpsilon});
      queue.emplace(total, static_cast<int32_t>(arena.size()) - 1);
    }
    for (const Arc &arc : fst.Arcs(node.state)) {
      double cost = node.cost + arc.weight.value;
      double estimate = cost + to_final[arc.nextstate];
      if (std::isinf(estimate) || estimate > cutoff) continue;
      arena.push_back({arc.nextstate, cost, index, arc.ilabel, arc.olabel});
      queue.emplace(estimate, static_cast<int32_t>(arena.size()) - 1);
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              if (a.ostring != b.ostring) return a.ostring < b.ostring;
              return a.istring < b.istring;
            });

  std::set<std::string> seen;
  for (const Candidate &cand : candidates) {
    if (static_cast<int>(results.size()) >= nshortest) break;
    if (opts.unique_outputs && !seen.insert(cand.ostring).second) continue;
    results.push_back(Path{cand.istring, cand.ostring, cand.weight});
  }
  return results;
}

}  // namespace translit
