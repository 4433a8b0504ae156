// lexicon.h
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

#ifndef TRANSLIT_LEXICON_H_
#define TRANSLIT_LEXICON_H_

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace translit {

struct Romanization {
  std::string text;
  long long freq = 1;
};

// Per-language map from native-script word to romanizations with
// observation frequencies. Insertion order is preserved so rewrites are
// diffable; romanizations per word are distinct (duplicate TSV lines are
// merged by summing frequencies).
class Lexicon {
 public:
  struct Entry {
    std::string native;
    std::vector<Romanization> forms;
  };

  std::string language;

  // Romanizations are lowercased (ASCII) on the way in.
  void Add(const std::string &native, const std::string &romanization,
           long long freq);

  const std::vector<Entry> &entries() const { return entries_; }
  std::vector<Entry> &entries() { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  // Lines lacking the count column load with frequency 1 and are tallied
  // here; frequency-based pre-processing refuses such lexicons.
  int missing_freq_lines = 0;

  // TSV: native<TAB>romanization<TAB>count (count optional on input,
  // always written on output).
  static Lexicon ReadTsv(std::istream &in, const std::string &language);
  void WriteTsv(std::ostream &out) const;

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

}  // namespace translit

#endif  // TRANSLIT_LEXICON_H_
