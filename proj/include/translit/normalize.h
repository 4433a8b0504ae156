// normalize.h
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
// Corpus normalization to the canonical Latin script: native-script
// tokens are replaced by their 1-best transliteration through the
// many-to-one machine, everything else passes through. Lines are
// independent, so the kernel is parallel over lines with output
// reassembled in input order.

#ifndef TRANSLIT_NORMALIZE_H_
#define TRANSLIT_NORMALIZE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "translit/fst.h"

namespace translit {

struct NormalizeOptions {
  bool passthrough_latin = true;
  bool parallel = true;
};

struct NormalizeReport {
  uint64_t lines = 0;
  uint64_t tokens = 0;
  uint64_t transliterated = 0;
  uint64_t latin_passthrough = 0;
  uint64_t other_passthrough = 0;
  uint64_t untransliterable = 0;
  std::map<std::string, uint64_t> tokens_by_script;

  void Merge(const NormalizeReport &other);
};

// Token -> 1-best output, memoized between chunks. Read-only during
// parallel sections; merged updates happen on the driving thread.
using TranslitCache = std::unordered_map<std::string, std::string>;

// OpenMP-parallel kernel over a block of lines.
std::vector<std::string> NormalizeLines(const std::vector<std::string> &lines,
                                        const Fst &many_to_one,
                                        const NormalizeOptions &options,
                                        NormalizeReport *report,
                                        TranslitCache *cache = nullptr);
// Serial reference implementation.
std::vector<std::string> NormalizeLinesSerial(
    const std::vector<std::string> &lines, const Fst &many_to_one,
    const NormalizeOptions &options, NormalizeReport *report,
    TranslitCache *cache = nullptr);

// Streaming driver: reads transcripts line by line, writes normalized
// lines in order, constant memory in the corpus length.
void NormalizeStream(std::istream &in, std::ostream &out,
                     const Fst &many_to_one, const NormalizeOptions &options,
                     NormalizeReport *report);

}  // namespace translit

#endif  // TRANSLIT_NORMALIZE_H_
