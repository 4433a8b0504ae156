// bench-main.cc
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
// Benchmarks the OpenMP kernels against their serial reference
// implementations on synthetic data: EM expectation counts, corpus
// normalization, and corpus scoring. Also cross-checks that both
// implementations agree.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "translit/normalize.h"
#include "translit/pair-align.h"
#include "translit/transliterator.h"
#include "translit/utf8.h"
#include "translit/wer.h"

using namespace translit;

namespace {

double NowSeconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double TimeIt(int repeats, Fn &&fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    double t0 = NowSeconds();
    fn();
    best = std::min(best, NowSeconds() - t0);
  }
  return best;
}

struct SyntheticData {
  Lexicon lexicon;
  std::vector<LexEntry> entries;
  std::vector<std::string> corpus;
  std::vector<Utterance> utterances;
};

SyntheticData MakeData(int entries, int lines) {
  SyntheticData data;
  data.lexicon.language = "hi";
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> length(3, 9);
  std::uniform_int_distribution<int> letter(0, 19);
  auto native_letter = [](int i) {
    return EncodeCodepoint(0x915 + static_cast<char32_t>(i));
  };
  std::vector<std::string> natives;
  std::vector<std::string> latins;
  for (int i = 0; i < entries; ++i) {
    int len = length(rng);
    std::string native, latin;
    for (int k = 0; k < len; ++k) {
      int c = letter(rng);
      native += native_letter(c);
      latin += static_cast<char>('a' + c);
    }
    data.lexicon.Add(native, latin, 1 + i % 7);
    data.entries.push_back(
        LexEntry{native, latin, static_cast<double>(1 + i % 7)});
    natives.push_back(native);
    latins.push_back(latin);
  }
  std::uniform_int_distribution<int> pick(0, entries - 1);
  std::uniform_int_distribution<int> line_len(4, 12);
  for (int i = 0; i < lines; ++i) {
    std::string line, ref, hyp;
    int len = line_len(rng);
    for (int k = 0; k < len; ++k) {
      int w = pick(rng);
      if (!line.empty()) {
        line += ' ';
        ref += ' ';
        hyp += ' ';
      }
      line += natives[w];
      ref += latins[w];
      hyp += (k % 5 == 0) ? natives[pick(rng)] : natives[w];
    }
    data.corpus.push_back(line);
    data.utterances.push_back(Utterance{"utt" + std::to_string(i),
                                        SplitWhitespace(ref),
                                        SplitWhitespace(hyp)});
  }
  return data;
}

void Report(const char *name, double serial, double parallel, bool agree) {
  std::printf("%-22s %10.1f ms %10.1f ms %8.2fx   %s\n", name,
              serial * 1e3, parallel * 1e3, serial / parallel,
              agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Serial vs OpenMP kernel benchmark"};
  int entries = 4000;
  int lines = 4000;
  int repeats = 3;
  app.add_option("--entries", entries, "Lexicon entries")
      ->capture_default_str();
  app.add_option("--lines", lines, "Corpus lines / utterances")
      ->capture_default_str();
  app.add_option("--repeats", repeats, "Repeats per measurement (best-of)")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("Built without OpenMP; parallel kernels run serially.\n");
#endif
  std::printf("entries=%d lines=%d (best of %d)\n\n", entries, lines,
              repeats);
  std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  SyntheticData data = MakeData(entries, lines);

  // EM expectation counts on a uniform model over the data's pair symbols.
  EmOptions em_options;
  em_options.max_iters = 1;
  em_options.parallel = false;
  AlignmentModel model = EmTrain(data.entries, em_options).model;

  EStepStats serial_stats, parallel_stats;
  double serial_time = TimeIt(repeats, [&] {
    serial_stats = ExpectationCountsSerial(model, data.entries);
  });
  double parallel_time = TimeIt(repeats, [&] {
    parallel_stats = ExpectationCounts(model, data.entries);
  });
  bool agree =
      std::fabs(serial_stats.log_likelihood - parallel_stats.log_likelihood) <
      1e-6 * std::fabs(serial_stats.log_likelihood);
  Report("em-expectations", serial_time, parallel_time, agree);

  // Corpus normalization through a real transliterator.
  BuildOptions build_options;
  build_options.em_iters = 3;
  build_options.quiet = true;
  Transliterator t = BuildTransliterator(data.lexicon, build_options);
  NormalizeOptions norm_options;
  std::vector<std::string> serial_lines, parallel_lines;
  serial_time = TimeIt(repeats, [&] {
    NormalizeReport report;
    serial_lines = NormalizeLinesSerial(data.corpus, t.fwd_fst, norm_options,
                                        &report, nullptr);
  });
  parallel_time = TimeIt(repeats, [&] {
    NormalizeReport report;
    parallel_lines = NormalizeLines(data.corpus, t.fwd_fst, norm_options,
                                    &report, nullptr);
  });
  Report("normalize-lines", serial_time, parallel_time,
         serial_lines == parallel_lines);

  // Transliteration-optimized scoring.
  CorpusScore serial_score, parallel_score;
  serial_time = TimeIt(repeats, [&] {
    TranslitEquivalence equivalence(&t.fwd_fst, 5);
    serial_score = ScoreCorpusSerial(data.utterances, &equivalence);
  });
  parallel_time = TimeIt(repeats, [&] {
    TranslitEquivalence equivalence(&t.fwd_fst, 5);
    parallel_score = ScoreCorpus(data.utterances, &equivalence);
  });
  agree = serial_score.total.errors() == parallel_score.total.errors() &&
          serial_score.total.ref_words == parallel_score.total.ref_words;
  Report("score-corpus", serial_time, parallel_time, agree);
  return 0;
}
