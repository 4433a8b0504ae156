// normalize.cc
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

#include "translit/normalize.h"

#include <istream>
#include <ostream>

#include "translit/script.h"
#include "translit/transliterator.h"
#include "translit/util.h"

namespace translit {

namespace {

constexpr size_t kChunkLines = 2048;

// A failed transliteration copies the token through; the marker makes
// the failure distinguishable from a successful identity mapping.
struct TokenResult {
  std::string text;
  bool transliterated = false;
  bool failed = false;
};

TokenResult TransliterateToken(const std::string &token,
                               const Fst &many_to_one,
                               const TranslitCache *cache) {
  if (cache) {
    auto it = cache->find(token);
    if (it != cache->end()) return TokenResult{it->second, true, false};
  }
  try {
    TransliterationResult result = TransliterateWord(many_to_one, token, 1);
    if (result.untransliterable()) return TokenResult{token, false, true};
    return TokenResult{result.candidates.front().text, true, false};
  } catch (const Error &) {
    return TokenResult{token, false, true};
  }
}

struct LineResult {
  std::string text;
  NormalizeReport report;
  std::vector<std::pair<std::string, std::string>> cache_updates;
};

LineResult NormalizeLine(const std::string &line, const Fst &many_to_one,
                         const NormalizeOptions &options,
                         const TranslitCache *cache) {
  LineResult result;
  result.report.lines = 1;
  std::string out;
  for (const std::string &token : SplitWhitespace(line)) {
    result.report.tokens += 1;
    ScriptTag tag = DetectScript(token);
    result.report.tokens_by_script[ScriptName(tag)] += 1;
    std::string replacement;
    if (tag == ScriptTag::kLatin && options.passthrough_latin) {
      result.report.latin_passthrough += 1;
      replacement = token;
    } else if (IsNativeScript(tag) || !options.passthrough_latin) {
      TokenResult t = TransliterateToken(token, many_to_one, cache);
      if (t.failed) {
        result.report.untransliterable += 1;
      } else {
        result.report.transliterated += 1;
        result.cache_updates.emplace_back(token, t.text);
      }
      replacement = t.text;
    } else {
      result.report.other_passthrough += 1;
      replacement = token;
    }
    if (!out.empty()) out += ' ';
    out += replacement;
  }
  result.text = std::move(out);
  return result;
}

std::vector<std::string> NormalizeLinesImpl(
    const std::vector<std::string> &lines, const Fst &many_to_one,
    const NormalizeOptions &options, NormalizeReport *report,
    TranslitCache *cache, bool parallel) {
  int n = static_cast<int>(lines.size());
  std::vector<LineResult> results(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (int i = 0; i < n; ++i) {
    results[i] = NormalizeLine(lines[i], many_to_one, options, cache);
  }
  (void)parallel;
  std::vector<std::string> out;
  out.reserve(n);
  for (LineResult &result : results) {
    if (report) report->Merge(result.report);
    if (cache) {
      for (auto &[token, text] : result.cache_updates) {
        cache->emplace(std::move(token), std::move(text));
      }
    }
    out.push_back(std::move(result.text));
  }
  return out;
}

}  // namespace

void NormalizeReport::Merge(const NormalizeReport &other) {
  lines += other.lines;
  tokens += other.tokens;
  transliterated += other.transliterated;
  latin_passthrough += other.latin_passthrough;
  other_passthrough += other.other_passthrough;
  untransliterable += other.untransliterable;
  for (const auto &[script, count] : other.tokens_by_script) {
    tokens_by_script[script] += count;
  }
}

std::vector<std::string> NormalizeLines(const std::vector<std::string> &lines,
                                        const Fst &many_to_one,
                                        const NormalizeOptions &options,
                                        NormalizeReport *report,
                                        TranslitCache *cache) {
  return NormalizeLinesImpl(lines, many_to_one, options, report, cache,
                            options.parallel);
}

std::vector<std::string> NormalizeLinesSerial(
    const std::vector<std::string> &lines, const Fst &many_to_one,
    const NormalizeOptions &options, NormalizeReport *report,
    TranslitCache *cache) {
  return NormalizeLinesImpl(lines, many_to_one, options, report, cache,
                            false);
}

void NormalizeStream(std::istream &in, std::ostream &out,
                     const Fst &many_to_one, const NormalizeOptions &options,
                     NormalizeReport *report) {
  TranslitCache cache;
  std::vector<std::string> chunk;
  chunk.reserve(kChunkLines);
  std::string line;
  bool more = true;
  while (more) {
    chunk.clear();
    while (chunk.size() < kChunkLines && (more = !!std::getline(in, line))) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      chunk.push_back(line);
    }
    if (chunk.empty()) break;
    for (const std::string &normalized :
         NormalizeLines(chunk, many_to_one, options, report, &cache)) {
      out << normalized << '\n';
    }
  }
}

}  // namespace translit
