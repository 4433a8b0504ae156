// lexprep.h
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
// Lexicon pre-processing ahead of transliteration-model training:
// agreement-based pruning keeps only romanizations shared across all
// languages (where such sharing exists), frequency-based pruning keeps
// only romanizations at or above their word's average frequency.

#ifndef TRANSLIT_LEXPREP_H_
#define TRANSLIT_LEXPREP_H_

#include <vector>

#include "translit/lexicon.h"

namespace translit {

struct PrepStats {
  std::string language;
  long long words = 0;
  long long words_modified = 0;
  long long forms_removed = 0;
};

// For every native word whose romanizations intersect the set of
// romanizations common to all lexicons, keeps exactly that intersection
// (frequencies retained); words without a shared form are left alone.
// Requires at least two lexicons.
std::vector<Lexicon> AgreementBased(const std::vector<Lexicon> &lexicons,
                                    std::vector<PrepStats> *stats = nullptr);

// Per native word, keeps the forms whose frequency reaches the word's
// arithmetic-mean frequency (exact integer comparison: freq * n >= sum).
// Never empties a word's form list. Requires explicit frequencies.
Lexicon FrequencyBased(const Lexicon &lexicon, PrepStats *stats = nullptr);

}  // namespace translit

#endif  // TRANSLIT_LEXPREP_H_
