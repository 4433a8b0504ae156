// lexicon.cc
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

#include "translit/lexicon.h"

#include <istream>
#include <ostream>

#include "translit/util.h"

namespace translit {

void Lexicon::Add(const std::string &native, const std::string &romanization,
                  long long freq) {
  std::string form = AsciiLower(romanization);
  auto [it, inserted] = index_.emplace(native, entries_.size());
  if (inserted) entries_.push_back(Entry{native, {}});
  Entry &entry = entries_[it->second];
  for (Romanization &existing : entry.forms) {
    if (existing.text == form) {
      existing.freq += freq;
      return;
    }
  }
  entry.forms.push_back(Romanization{form, freq});
}

Lexicon Lexicon::ReadTsv(std::istream &in, const std::string &language) {
  Lexicon lexicon;
  lexicon.language = language;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError("lexicon line " + std::to_string(lineno) +
                       ": expected native<TAB>romanization[<TAB>count]");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError("lexicon line " + std::to_string(lineno) +
                       ": empty word");
    }
    long long freq = 1;
    if (fields.size() == 3) {
      try {
        freq = ParseCount(fields[2]);
      } catch (const ParseError &) {
        throw ParseError("lexicon line " + std::to_string(lineno) +
                         ": bad count \"" + fields[2] + "\"");
      }
    } else {
      ++lexicon.missing_freq_lines;
    }
    lexicon.Add(fields[0], fields[1], freq);
  }
  return lexicon;
}

void Lexicon::WriteTsv(std::ostream &out) const {
  for (const Entry &entry : entries_) {
    for (const Romanization &form : entry.forms) {
      out << entry.native << '\t' << form.text << '\t' << form.freq << '\n';
    }
  }
}

}  // namespace translit
