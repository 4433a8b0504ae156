// fst.cc
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

#include "translit/fst.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "translit/util.h"

namespace translit {

SymbolTable::SymbolTable(std::string epsilon) {
  symbols_.push_back(epsilon);
  ids_.emplace(std::move(epsilon), kEpsilon);
}

Label SymbolTable::AddSymbol(const std::string &symbol) {
  auto it = ids_.find(symbol);
  if (it != ids_.end()) return it->second;
  Label id = static_cast<Label>(symbols_.size());
  symbols_.push_back(symbol);
  ids_.emplace(symbol, id);
  return id;
}

Label SymbolTable::AddSymbol(const std::string &symbol, Label id) {
  if (id != static_cast<Label>(symbols_.size())) {
    throw ParseError("symbol table ids must be dense and in order; got " +
                     std::to_string(id) + " for \"" + symbol + "\"");
  }
  if (ids_.count(symbol)) {
    throw ParseError("duplicate symbol \"" + symbol + "\"");
  }
  symbols_.push_back(symbol);
  ids_.emplace(symbol, id);
  return id;
}

Label SymbolTable::Find(std::string_view symbol) const {
  auto it = ids_.find(std::string(symbol));
  return it == ids_.end() ? kNoLabel : it->second;
}

const std::string &SymbolTable::Symbol(Label id) const {
  if (id < 0 || id >= Size()) {
    throw Error("symbol id out of range: " + std::to_string(id));
  }
  return symbols_[id];
}

void SymbolTable::Write(std::ostream &out) const {
  for (Label id = 0; id < Size(); ++id) {
    out << symbols_[id] << '\t' << id << '\n';
  }
}

SymbolTable SymbolTable::Read(std::istream &in) {
  std::vector<std::pair<Label, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError("symbol table line " + std::to_string(lineno) +
                       ": expected symbol<TAB>id");
    }
    entries.emplace_back(static_cast<Label>(ParseCount(fields[1])),
                         fields[0]);
  }
  std::sort(entries.begin(), entries.end());
  if (entries.empty()) return SymbolTable();
  if (entries.front().first != kEpsilon) {
    throw ParseError("symbol table is missing the id-0 epsilon entry");
  }
  SymbolTable table(entries.front().second);
  for (size_t i = 1; i < entries.size(); ++i) {
    table.AddSymbol(entries[i].second, entries[i].first);
  }
  return table;
}

StateId Fst::AddState() {
  arcs_.emplace_back();
  finals_.push_back(Weight::Zero());
  return static_cast<StateId>(arcs_.size()) - 1;
}

void Fst::SetStart(StateId s) {
  if (s < 0 || s >= NumStates()) {
    throw Error("SetStart: invalid state " + std::to_string(s));
  }
  start_ = s;
}

void Fst::SetFinal(StateId s, Weight w) {
  if (s < 0 || s >= NumStates()) {
    throw Error("SetFinal: invalid state " + std::to_string(s));
  }
  finals_[s] = w;
}

void Fst::AddArc(StateId s, const Arc &arc) {
  if (s < 0 || s >= NumStates()) {
    throw Error("AddArc: invalid state " + std::to_string(s));
  }
  arcs_[s].push_back(arc);
}

int64_t Fst::NumArcs() const {
  int64_t n = 0;
  for (const auto &a : arcs_) n += static_cast<int64_t>(a.size());
  return n;
}

void Fst::Validate() const {
  if (Empty()) {
    if (NumStates() != 0) throw Error("no start state set");
    return;
  }
  if (start_ < 0 || start_ >= NumStates()) throw Error("invalid start state");
  for (StateId s = 0; s < NumStates(); ++s) {
    for (const Arc &arc : arcs_[s]) {
      if (arc.nextstate < 0 || arc.nextstate >= NumStates()) {
        throw Error("arc from state " + std::to_string(s) +
                    " has invalid nextstate " + std::to_string(arc.nextstate));
      }
      if (isyms_ && (arc.ilabel < 0 || arc.ilabel >= isyms_->Size())) {
        throw Error("unresolvable input label " + std::to_string(arc.ilabel));
      }
      if (osyms_ && (arc.olabel < 0 || arc.olabel >= osyms_->Size())) {
        throw Error("unresolvable output label " + std::to_string(arc.olabel));
      }
    }
  }
}

Fst LinearAcceptor(const std::vector<std::string> &symbols,
                   std::shared_ptr<const SymbolTable> table) {
  Fst fst;
  fst.SetInputSymbols(table);
  fst.SetOutputSymbols(table);
  StateId state = fst.AddState();
  fst.SetStart(state);
  for (const std::string &symbol : symbols) {
    Label label = table->Find(symbol);
    if (label == kNoLabel) {
      throw ParseError("unknown symbol \"" + symbol + "\"");
    }
    StateId next = fst.AddState();
    fst.AddArc(state, Arc{label, label, Weight::One(), next});
    state = next;
  }
  fst.SetFinal(state, Weight::One());
  return fst;
}

Fst IdentityTransducer(std::shared_ptr<const SymbolTable> table) {
  Fst fst;
  fst.SetInputSymbols(table);
  fst.SetOutputSymbols(table);
  StateId state = fst.AddState();
  fst.SetStart(state);
  fst.SetFinal(state, Weight::One());
  for (Label label = 1; label < table->Size(); ++label) {
    fst.AddArc(state, Arc{label, label, Weight::One(), state});
  }
  return fst;
}

Fst Invert(const Fst &fst) {
  Fst out;
  out.SetInputSymbols(fst.OutputSymbols());
  out.SetOutputSymbols(fst.InputSymbols());
  for (StateId s = 0; s < fst.NumStates(); ++s) out.AddState();
  if (fst.Empty()) return out;
  out.SetStart(fst.Start());
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    out.SetFinal(s, fst.Final(s));
    for (const Arc &arc : fst.Arcs(s)) {
      out.AddArc(s, Arc{arc.olabel, arc.ilabel, arc.weight, arc.nextstate});
    }
  }
  return out;
}

Fst Connect(const Fst &fst) {
  Fst out;
  out.SetInputSymbols(fst.InputSymbols());
  out.SetOutputSymbols(fst.OutputSymbols());
  if (fst.Empty()) return out;

  StateId n = fst.NumStates();
  std::vector<char> reachable(n, 0);
  std::vector<StateId> stack{fst.Start()};
  reachable[fst.Start()] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Arc &arc : fst.Arcs(s)) {
      if (!reachable[arc.nextstate]) {
        reachable[arc.nextstate] = 1;
        stack.push_back(arc.nextstate);
      }
    }
  }

  // Coreachability over reversed arcs.
  std::vector<std::vector<StateId>> preds(n);
  for (StateId s = 0; s < n; ++s) {
    for (const Arc &arc : fst.Arcs(s)) preds[arc.nextstate].push_back(s);
  }
  std::vector<char> coreachable(n, 0);
  for (StateId s = 0; s < n; ++s) {
    if (fst.IsFinal(s)) {
      coreachable[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : preds[s]) {
      if (!coreachable[p]) {
        coreachable[p] = 1;
        stack.push_back(p);
      }
    }
  }

  std::vector<StateId> remap(n, kNoStateId);
  for (StateId s = 0; s < n; ++s) {
    if (reachable[s] && coreachable[s]) remap[s] = out.AddState();
  }
  if (remap[fst.Start()] == kNoStateId) return out;  // empty language
  out.SetStart(remap[fst.Start()]);
  for (StateId s = 0; s < n; ++s) {
    if (remap[s] == kNoStateId) continue;
    out.SetFinal(remap[s], fst.Final(s));
    for (const Arc &arc : fst.Arcs(s)) {
      if (remap[arc.nextstate] == kNoStateId) continue;
      out.AddArc(remap[s],
                 Arc{arc.ilabel, arc.olabel, arc.weight, remap[arc.nextstate]});
    }
  }
  return out;
}

namespace {

std::string LabelName(Label label, const std::shared_ptr<const SymbolTable> &syms) {
  if (syms) return syms->Symbol(label);
  return std::to_string(label);
}

Label ResolveLabel(const std::string &name,
                   const std::shared_ptr<const SymbolTable> &syms, int lineno) {
  if (syms) {
    Label label = syms->Find(name);
    if (label == kNoLabel) {
      throw ParseError("fst line " + std::to_string(lineno) +
                       ": unknown symbol \"" + name + "\"");
    }
    return label;
  }
  return static_cast<Label>(ParseCount(name));
}

}  // namespace

void WriteFstText(const Fst &fst, std::ostream &out) {
  if (fst.Empty()) return;
  // The start state's lines come first so readers can recover it.
  std::vector<StateId> order;
  order.push_back(fst.Start());
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (s != fst.Start()) order.push_back(s);
  }
  for (StateId s : order) {
    for (const Arc &arc : fst.Arcs(s)) {
      out << s << ' ' << arc.nextstate << ' '
          << LabelName(arc.ilabel, fst.InputSymbols()) << ' '
          << LabelName(arc.olabel, fst.OutputSymbols()) << ' '
          << FormatDouble(arc.weight.value) << '\n';
    }
    if (fst.IsFinal(s)) {
      out << s << ' ' << FormatDouble(fst.Final(s).value) << '\n';
    }
  }
}

Fst ReadFstText(std::istream &in, std::shared_ptr<const SymbolTable> isyms,
                std::shared_ptr<const SymbolTable> osyms) {
  Fst fst;
  fst.SetInputSymbols(isyms);
  fst.SetOutputSymbols(osyms);
  std::string line;
  int lineno = 0;
  bool have_start = false;
  auto state = [&](long long id) {
    if (id < 0) {
      throw ParseError("fst line " + std::to_string(lineno) +
                       ": negative state id");
    }
    while (fst.NumStates() <= id) fst.AddState();
    return static_cast<StateId>(id);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() == 2) {
      StateId s = state(ParseCount(fields[0]));
      if (!have_start) {
        fst.SetStart(s);
        have_start = true;
      }
      fst.SetFinal(s, Weight(ParseDouble(fields[1])));
    } else if (fields.size() == 5) {
      StateId src = state(ParseCount(fields[0]));
      StateId dst = state(ParseCount(fields[1]));
      Arc arc;
      arc.ilabel = ResolveLabel(fields[2], isyms, lineno);
      arc.olabel = ResolveLabel(fields[3], osyms, lineno);
      arc.weight = Weight(ParseDouble(fields[4]));
      arc.nextstate = dst;
      if (!have_start) {
        fst.SetStart(src);
        have_start = true;
      }
      fst.AddArc(src, arc);
    } else {
      throw ParseError("fst line " + std::to_string(lineno) +
                       ": expected 2 or 5 fields, got " +
                       std::to_string(fields.size()));
    }
  }
  return fst;
}

}  // namespace translit
