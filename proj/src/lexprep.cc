// lexprep.cc
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

#include "translit/lexprep.h"

#include <set>
#include <string>

#include "translit/util.h"

namespace translit {

std::vector<Lexicon> AgreementBased(const std::vector<Lexicon> &lexicons,
                                    std::vector<PrepStats> *stats) {
  if (lexicons.size() < 2) {
    throw ParseError("agreement-based pre-processing needs >= 2 lexicons");
  }

  std::set<std::string> common;
  for (size_t i = 0; i < lexicons.size(); ++i) {
    std::set<std::string> forms;
    for (const auto &entry : lexicons[i].entries()) {
      for (const auto &form : entry.forms) forms.insert(form.text);
    }
    if (i == 0) {
      common = std::move(forms);
    } else {
      std::set<std::string> kept;
      for (const std::string &form : common) {
        if (forms.count(form)) kept.insert(form);
      }
      common = std::move(kept);
    }
  }

  std::vector<Lexicon> out;
  out.reserve(lexicons.size());
  if (stats) stats->clear();
  for (const Lexicon &lexicon : lexicons) {
    Lexicon pruned;
    pruned.language = lexicon.language;
    pruned.missing_freq_lines = lexicon.missing_freq_lines;
    PrepStats st;
    st.language = lexicon.language;
    for (const auto &entry : lexicon.entries()) {
      st.words += 1;
      bool shares = false;
      for (const auto &form : entry.forms) {
        if (common.count(form.text)) {
          shares = true;
          break;
        }
      }
      long long kept = 0;
      for (const auto &form : entry.forms) {
        if (!shares || common.count(form.text)) {
          pruned.Add(entry.native, form.text, form.freq);
          ++kept;
        }
      }
      if (kept < static_cast<long long>(entry.forms.size())) {
        st.words_modified += 1;
        st.forms_removed += static_cast<long long>(entry.forms.size()) - kept;
      }
    }
    if (stats) stats->push_back(st);
    out.push_back(std::move(pruned));
  }
  return out;
}

Lexicon FrequencyBased(const Lexicon &lexicon, PrepStats *stats) {
  if (lexicon.missing_freq_lines > 0) {
    throw ParseError("frequency-based pre-processing needs a count on "
                     "every lexicon line (" +
                     std::to_string(lexicon.missing_freq_lines) +
                     " lines lack one)");
  }
  Lexicon pruned;
  pruned.language = lexicon.language;
  PrepStats st;
  st.language = lexicon.language;
  for (const auto &entry : lexicon.entries()) {
    st.words += 1;
    long long sum = 0;
    for (const auto &form : entry.forms) sum += form.freq;
    long long n = static_cast<long long>(entry.forms.size());
    long long kept = 0;
    for (const auto &form : entry.forms) {
      // freq >= sum / n as exact integers
      if (form.freq * n >= sum) {
        pruned.Add(entry.native, form.text, form.freq);
        ++kept;
      }
    }
    if (kept < n) {
      st.words_modified += 1;
      st.forms_removed += n - kept;
    }
  }
  if (stats) *stats = st;
  return pruned;
}

}  // namespace translit
