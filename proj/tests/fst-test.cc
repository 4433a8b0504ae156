// fst-test.cc
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "translit/fst.h"
#include "translit/util.h"
#include "test-util.h"

using namespace translit;
using namespace translit::testing;

namespace {

bool StructurallyEqual(const Fst &a, const Fst &b) {
  if (a.NumStates() != b.NumStates() || a.Start() != b.Start()) return false;
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (!(a.Final(s) == b.Final(s))) return false;
    const auto &arcs_a = a.Arcs(s);
    const auto &arcs_b = b.Arcs(s);
    if (arcs_a.size() != arcs_b.size()) return false;
    for (size_t i = 0; i < arcs_a.size(); ++i) {
      if (arcs_a[i].ilabel != arcs_b[i].ilabel ||
          arcs_a[i].olabel != arcs_b[i].olabel ||
          !(arcs_a[i].weight == arcs_b[i].weight) ||
          arcs_a[i].nextstate != arcs_b[i].nextstate) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Weight> RandomWeights(std::mt19937 *rng, int count) {
  std::vector<Weight> weights;
  std::uniform_int_distribution<int> step(0, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < count; ++i) {
    if (unit(*rng) < 0.1) {
      weights.push_back(Weight::Zero());
    } else {
      weights.push_back(Weight(step(*rng) * 0.25));
    }
  }
  return weights;
}

}  // namespace

TEST_CASE("tropical semiring axioms hold exactly on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto w = RandomWeights(&rng, 3);
    Weight a = w[0], b = w[1], c = w[2];
    CHECK(Plus(a, b) == Plus(b, a));
    CHECK(Plus(Plus(a, b), c) == Plus(a, Plus(b, c)));
    CHECK(Times(Times(a, b), c) == Times(a, Times(b, c)));
    CHECK(Times(a, Plus(b, c)) == Plus(Times(a, b), Times(a, c)));
    CHECK(Times(Plus(b, c), a) == Plus(Times(b, a), Times(c, a)));
    CHECK(Times(a, Weight::Zero()) == Weight::Zero());
    CHECK(Times(Weight::Zero(), a) == Weight::Zero());
    CHECK(Times(a, Weight::One()) == a);
    CHECK(Plus(a, Weight::Zero()) == a);
  }
}

TEST_CASE("linear acceptor") {
  auto table = AbcTable();

  SUBCASE("empty sequence is the single-state identity") {
    Fst fst = LinearAcceptor({}, table);
    CHECK(fst.NumStates() == 1);
    CHECK(fst.Start() == 0);
    CHECK(fst.Final(0) == Weight::One());
  }

  SUBCASE("two symbols give a three-state chain") {
    Fst fst = LinearAcceptor({"a", "b"}, table);
    CHECK(fst.NumStates() == 3);
    REQUIRE(fst.Arcs(0).size() == 1);
    CHECK(fst.Arcs(0)[0].ilabel == table->Find("a"));
    CHECK(fst.Arcs(0)[0].olabel == table->Find("a"));
    auto paths = EnumeratePaths(fst);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].istring == "ab");
    CHECK(paths[0].ostring == "ab");
    CHECK(paths[0].weight == 0.0);
  }

  SUBCASE("unknown symbol is rejected by name") {
    try {
      LinearAcceptor({"a", "?"}, table);
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(std::string(e.what()).find("?") != std::string::npos);
    }
  }
}

TEST_CASE("invert") {
  auto table = AbcTable();

  SUBCASE("swaps labels and keeps weights") {
    auto other = std::make_shared<SymbolTable>();
    other->AddSymbol("x");
    Fst fst;
    fst.SetInputSymbols(table);
    fst.SetOutputSymbols(other);
    fst.SetStart(fst.AddState());
    fst.SetFinal(fst.AddState(), Weight::One());
    fst.AddArc(0, Arc{table->Find("a"), other->Find("x"), Weight(0.5), 1});
    Fst inv = Invert(fst);
    REQUIRE(inv.Arcs(0).size() == 1);
    CHECK(inv.Arcs(0)[0].ilabel == other->Find("x"));
    CHECK(inv.Arcs(0)[0].olabel == table->Find("a"));
    CHECK(inv.Arcs(0)[0].weight == Weight(0.5));
    CHECK(inv.InputSymbols() == other);
    CHECK(inv.OutputSymbols() == table);
  }

  SUBCASE("is an involution on random machines") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
      Fst fst = RandomAcyclicFst(&rng, table, 8);
      CHECK(StructurallyEqual(Invert(Invert(fst)), fst));
    }
  }

  SUBCASE("fixes acceptors") {
    Fst fst = LinearAcceptor({"a", "b", "c"}, table);
    CHECK(StructurallyEqual(Invert(fst), fst));
  }
}

TEST_CASE("compose") {
  auto table = AbcTable();

  SUBCASE("deterministic relabeling") {
    auto xy = std::make_shared<SymbolTable>();
    xy->AddSymbol("x");
    xy->AddSymbol("y");
    Fst relabel;
    relabel.SetInputSymbols(table);
    relabel.SetOutputSymbols(xy);
    StateId s = relabel.AddState();
    relabel.SetStart(s);
    relabel.SetFinal(s, Weight::One());
    relabel.AddArc(s, Arc{table->Find("a"), xy->Find("x"), Weight::One(), s});
    relabel.AddArc(s, Arc{table->Find("b"), xy->Find("y"), Weight::One(), s});

    Fst composed = Compose(LinearAcceptor({"a", "b"}, table), relabel);
    auto paths = EnumeratePaths(composed);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].istring == "ab");
    CHECK(paths[0].ostring == "xy");
    CHECK(paths[0].weight == 0.0);
  }

  SUBCASE("identity law") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      Fst fst = RandomAcyclicFst(&rng, table, 6);
      Fst composed = Compose(fst, IdentityTransducer(table));
      CHECK(PathRelation(EnumeratePaths(composed)) ==
            PathRelation(EnumeratePaths(fst)));
    }
  }

  SUBCASE("agrees with the brute-force join on random machines") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
      Fst a = RandomAcyclicFst(&rng, table, 6);
      Fst b = RandomAcyclicFst(&rng, table, 6);
      auto joined = JoinRelations(EnumeratePaths(a), EnumeratePaths(b));
      auto composed = PathRelation(EnumeratePaths(Compose(a, b)));
      CHECK(composed == joined);
    }
  }

  SUBCASE("rejects mismatched symbol tables") {
    auto other = std::make_shared<SymbolTable>();
    other->AddSymbol("z");
    Fst left = LinearAcceptor({"a"}, table);
    Fst right = LinearAcceptor({"z"}, other);
    CHECK_THROWS_AS((void)Compose(left, right), Error);
  }
}

TEST_CASE("connect") {
  auto table = AbcTable();

  SUBCASE("removes a dead-end state") {
    Fst fst = LinearAcceptor({"a"}, table);
    StateId dead = fst.AddState();
    fst.AddArc(0, Arc{table->Find("b"), table->Find("b"), Weight::One(),
                      dead});
    Fst trimmed = Connect(fst);
    CHECK(trimmed.NumStates() == 2);
    CHECK(PathRelation(EnumeratePaths(trimmed)) ==
          PathRelation(EnumeratePaths(fst)));
  }

  SUBCASE("fixes already-trim machines") {
    Fst fst = LinearAcceptor({"a", "b"}, table);
    CHECK(StructurallyEqual(Connect(fst), fst));
  }

  SUBCASE("unreachable final gives the empty language") {
    Fst fst;
    fst.SetInputSymbols(table);
    fst.SetOutputSymbols(table);
    StateId s0 = fst.AddState();
    StateId s1 = fst.AddState();
    fst.SetStart(s0);
    fst.SetFinal(s1, Weight::One());  // no arc reaches s1
    Fst trimmed = Connect(fst);
    CHECK(trimmed.Empty());
    CHECK(ShortestPaths(trimmed, 5).empty());
  }
}

TEST_CASE("shortest paths") {
  auto table = AbcTable();

  SUBCASE("picks the cheaper of two paths first") {
    Fst fst;
    fst.SetInputSymbols(table);
    fst.SetOutputSymbols(table);
    StateId s0 = fst.AddState();
    StateId s1 = fst.AddState();
    fst.SetStart(s0);
    fst.SetFinal(s1, Weight::One());
    fst.AddArc(s0, Arc{table->Find("a"), table->Find("a"), Weight(2.5), s1});
    fst.AddArc(s0, Arc{table->Find("b"), table->Find("b"), Weight(1.0), s1});
    auto paths = ShortestPaths(fst, 2);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].weight == 1.0);
    CHECK(paths[0].ostring == "b");
    CHECK(paths[1].weight == 2.5);
  }

  SUBCASE("n=1 matches the enumerated minimum") {
    std::mt19937 rng(57);
    for (int trial = 0; trial < 100; ++trial) {
      Fst fst = RandomAcyclicFst(&rng, table, 7);
      auto all = EnumeratePaths(fst);
      auto best = ShortestPaths(fst, 1);
      if (all.empty()) {
        CHECK(best.empty());
        continue;
      }
      REQUIRE(best.size() == 1);
      CHECK(best[0].weight == all.front().weight);
    }
  }

  SUBCASE("equal weights break ties by output string") {
    Fst fst;
    fst.SetInputSymbols(table);
    fst.SetOutputSymbols(table);
    StateId s0 = fst.AddState();
    StateId s1 = fst.AddState();
    StateId s2 = fst.AddState();
    StateId s3 = fst.AddState();
    fst.SetStart(s0);
    fst.SetFinal(s3, Weight::One());
    Label a = table->Find("a"), b = table->Find("b");
    fst.AddArc(s0, Arc{a, a, Weight(1.0), s1});
    fst.AddArc(s1, Arc{b, b, Weight::One(), s3});
    fst.AddArc(s0, Arc{a, a, Weight(1.0), s2});
    fst.AddArc(s2, Arc{a, a, Weight::One(), s3});
    auto paths = ShortestPaths(fst, 2);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].ostring == "aa");
    CHECK(paths[1].ostring == "ab");
  }

  SUBCASE("full enumeration agrees with the oracle multiset") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
      Fst fst = RandomAcyclicFst(&rng, table, 8);
      auto oracle = EnumeratePaths(fst);
      auto paths = ShortestPaths(fst, 1'000'000);
      REQUIRE(paths.size() == oracle.size());
      for (size_t i = 0; i < paths.size(); ++i) {
        CHECK(paths[i].weight == oracle[i].weight);
        CHECK(paths[i].istring == oracle[i].istring);
        CHECK(paths[i].ostring == oracle[i].ostring);
      }
    }
  }

  SUBCASE("unique outputs keeps the cheapest per string") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 60; ++trial) {
      Fst fst = RandomAcyclicFst(&rng, table, 7);
      auto relation = PathRelation(EnumeratePaths(fst));
      std::map<std::string, double> cheapest;
      for (const auto &[key, w] : relation) {
        auto it = cheapest.find(key.second);
        if (it == cheapest.end() || w < it->second) cheapest[key.second] = w;
      }
      ShortestPathsOptions opts;
      opts.unique_outputs = true;
      auto paths = ShortestPaths(fst, 1'000'000, opts);
      REQUIRE(paths.size() == cheapest.size());
      for (const Path &path : paths) {
        REQUIRE(cheapest.count(path.ostring) == 1);
        CHECK(path.weight == cheapest[path.ostring]);
      }
    }
  }
}

TEST_CASE("text round trip") {
  auto table = AbcTable();
  std::mt19937 rng(1009);
  for (int trial = 0; trial < 30; ++trial) {
    Fst fst = RandomAcyclicFst(&rng, table, 8);
    std::stringstream stream;
    WriteFstText(fst, stream);
    Fst back = ReadFstText(stream, table, table);
    // The writer reorders states so the start state's lines come first;
    // compare the path multisets instead of the raw structure.
    auto a = EnumeratePaths(fst);
    auto b = EnumeratePaths(back);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("symbol table io and invariants") {
  SymbolTable table;
  CHECK(table.Symbol(0) == "<eps>");
  Label a = table.AddSymbol("a");
  CHECK(table.AddSymbol("a") == a);
  CHECK(table.Find("a") == a);
  CHECK(table.Find("zz") == kNoLabel);
  std::stringstream stream;
  table.Write(stream);
  SymbolTable back = SymbolTable::Read(stream);
  CHECK(back == table);
}
