// translitfst-main.cc
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
// Command-line front end for the transliteration toolkit. Exit codes:
// 0 success, 2 usage or input parse error, 3 model/build failure.
// stdout carries data, stderr carries diagnostics.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "translit/balance.h"
#include "translit/fst.h"
#include "translit/lexicon.h"
#include "translit/lexprep.h"
#include "translit/normalize.h"
#include "translit/script.h"
#include "translit/transliterator.h"
#include "translit/util.h"
#include "translit/wer.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace translit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBuild = 3;

void SetThreads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream OpenOutput(const std::string &path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  return out;
}

Lexicon LoadLexicon(const std::string &path, const std::string &language) {
  auto in = OpenInput(path);
  std::string tag =
      language.empty() ? fs::path(path).stem().string() : language;
  try {
    return Lexicon::ReadTsv(in, tag);
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<Transliterator> LoadBundles(
    const std::vector<std::string> &dirs, bool reverse) {
  std::vector<Transliterator> members;
  members.reserve(dirs.size());
  for (const std::string &dir : dirs) {
    Transliterator t = LoadBundle(dir);
    members.push_back(reverse ? Reverse(t) : std::move(t));
  }
  return members;
}

// Single bundle: the member machine itself; several: their union.
Fst ManyToOne(const std::vector<Transliterator> &members) {
  if (members.size() == 1) return members.front().fwd_fst;
  return BuildUnion(members);
}

json PrepStatsJson(const PrepStats &st) {
  return json{{"language", st.language},
              {"words", st.words},
              {"words_modified", st.words_modified},
              {"forms_removed", st.forms_removed}};
}

struct ScoredLine {
  std::string id;
  std::vector<std::string> tokens;
  bool explicit_id = false;
};

std::vector<ScoredLine> ReadScoredLines(const std::string &path) {
  auto in = OpenInput(path);
  std::vector<ScoredLine> lines;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ScoredLine scored;
    auto tab = line.find('\t');
    if (tab != std::string::npos) {
      scored.id = line.substr(0, tab);
      scored.tokens = SplitWhitespace(line.substr(tab + 1));
      scored.explicit_id = true;
    } else {
      scored.id = "utt" + std::to_string(n);
      scored.tokens = SplitWhitespace(line);
    }
    lines.push_back(std::move(scored));
  }
  return lines;
}

int RunBuild(const std::string &lexicon_path, const std::string &out_dir,
             const std::string &language, int order, int em_iters,
             double em_tol, bool no_timestamp, int threads) {
  SetThreads(threads);
  Lexicon lexicon = LoadLexicon(lexicon_path, language);
  BuildOptions options;
  options.order = order;
  options.em_iters = em_iters;
  options.em_tol = em_tol;
  Transliterator t = BuildTransliterator(lexicon, options);
  SaveBundle(t, out_dir, !no_timestamp);
  return kExitOk;
}

int RunTranslit(const std::vector<std::string> &bundles, bool reverse,
                int k) {
  std::vector<Transliterator> members = LoadBundles(bundles, reverse);
  Fst machine = ManyToOne(members);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::cout << line;
    try {
      TransliterationResult result = TransliterateWord(machine, line, k);
      if (result.untransliterable()) {
        std::cout << "\t<untransliterable>";
      } else {
        for (const Candidate &cand : result.candidates) {
          std::cout << '\t' << cand.text;
        }
      }
    } catch (const ParseError &e) {
      std::cout << "\t<untransliterable>";
      std::cerr << "warning: " << e.what() << "\n";
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int RunPrep(const std::string &mode, const std::vector<std::string> &paths,
            const std::string &out_dir) {
  std::vector<Lexicon> lexicons;
  lexicons.reserve(paths.size());
  for (const std::string &path : paths) lexicons.push_back(LoadLexicon(path, ""));

  json summary;
  summary["mode"] = mode;
  std::vector<json> per_lexicon;

  if (mode == "ab" || mode == "abfb") {
    if (lexicons.size() < 2) {
      throw ParseError("--mode=" + mode + " needs at least 2 lexicons");
    }
    std::vector<PrepStats> stats;
    lexicons = AgreementBased(lexicons, &stats);
    for (const PrepStats &st : stats) {
      json entry = PrepStatsJson(st);
      entry["pass"] = "ab";
      per_lexicon.push_back(entry);
    }
  }
  if (mode == "fb" || mode == "abfb") {
    for (Lexicon &lexicon : lexicons) {
      PrepStats st;
      lexicon = FrequencyBased(lexicon, &st);
      json entry = PrepStatsJson(st);
      entry["pass"] = "fb";
      per_lexicon.push_back(entry);
    }
  }
  summary["lexicons"] = per_lexicon;

  fs::create_directories(out_dir);
  for (size_t i = 0; i < paths.size(); ++i) {
    fs::path out_path = fs::path(out_dir) / fs::path(paths[i]).filename();
    auto out = OpenOutput(out_path.string());
    lexicons[i].WriteTsv(out);
  }
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

int RunNormalize(const std::string &corpus_path,
                 const std::vector<std::string> &bundles,
                 bool no_passthrough_latin, const std::string &output_path,
                 const std::string &report_path, int threads) {
  SetThreads(threads);
  std::vector<Transliterator> members = LoadBundles(bundles, false);
  Fst machine = ManyToOne(members);

  NormalizeOptions options;
  options.passthrough_latin = !no_passthrough_latin;
  NormalizeReport report;

  auto in = OpenInput(corpus_path);
  if (output_path.empty()) {
    NormalizeStream(in, std::cout, machine, options, &report);
  } else {
    auto out = OpenOutput(output_path);
    NormalizeStream(in, out, machine, options, &report);
  }

  json report_json{{"lines", report.lines},
                   {"tokens", report.tokens},
                   {"transliterated", report.transliterated},
                   {"latin_passthrough", report.latin_passthrough},
                   {"other_passthrough", report.other_passthrough},
                   {"untransliterable", report.untransliterable},
                   {"tokens_by_script", report.tokens_by_script}};
  if (!report_path.empty()) {
    auto out = OpenOutput(report_path);
    out << report_json.dump(2) << "\n";
  }
  std::cerr << "normalized " << report.lines << " lines, " << report.tokens
            << " tokens (" << report.transliterated << " transliterated, "
            << report.untransliterable << " untransliterable)\n";
  return kExitOk;
}

int RunBalance(const std::string &amounts_path, double cap) {
  auto in = OpenInput(amounts_path);
  std::vector<std::pair<std::string, double>> amounts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError(amounts_path + " line " + std::to_string(lineno) +
                       ": expected language<TAB>amount");
    }
    amounts.emplace_back(fields[0], ParseDouble(fields[1]));
  }
  BalancePlan plan = ComputeBalancePlan(amounts, cap);
  json out{{"cap", plan.cap},
           {"target", plan.target},
           {"imbalance", plan.imbalance}};
  std::vector<json> entries;
  for (const BalanceEntry &entry : plan.entries) {
    entries.push_back(json{{"language", entry.language},
                           {"amount", entry.amount},
                           {"multiplier", entry.multiplier},
                           {"resulting", entry.resulting}});
  }
  out["languages"] = entries;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int RunScore(const std::string &ref_path, const std::string &hyp_path,
             const std::vector<std::string> &bundles, int k,
             const std::string &json_path, int threads) {
  SetThreads(threads);
  std::vector<ScoredLine> refs = ReadScoredLines(ref_path);
  std::vector<ScoredLine> hyps = ReadScoredLines(hyp_path);
  if (refs.size() != hyps.size()) {
    throw ParseError("ref has " + std::to_string(refs.size()) +
                     " lines but hyp has " + std::to_string(hyps.size()));
  }

  std::vector<Utterance> utterances;
  utterances.reserve(refs.size());
  for (size_t i = 0; i < refs.size(); ++i) {
    if (refs[i].explicit_id && hyps[i].explicit_id &&
        refs[i].id != hyps[i].id) {
      throw ParseError("utterance id mismatch at line " +
                       std::to_string(i + 1) + ": \"" + refs[i].id +
                       "\" vs \"" + hyps[i].id + "\"");
    }
    if (refs[i].tokens.empty()) {
      throw ParseError("empty reference at line " + std::to_string(i + 1) +
                       " (WER undefined)");
    }
    utterances.push_back(
        Utterance{refs[i].id, refs[i].tokens, hyps[i].tokens});
  }

  Fst machine;
  bool translit_optimized = !bundles.empty();
  if (translit_optimized) {
    machine = ManyToOne(LoadBundles(bundles, false));
  }
  TranslitEquivalence equivalence(translit_optimized ? &machine : nullptr, k);
  CorpusScore score = ScoreCorpus(utterances, &equivalence);

  char summary[128];
  std::snprintf(summary, sizeof(summary),
                "WER=%.2f S=%lld I=%lld D=%lld N=%lld",
                100.0 * score.total.wer(),
                static_cast<long long>(score.total.substitutions),
                static_cast<long long>(score.total.insertions),
                static_cast<long long>(score.total.deletions),
                static_cast<long long>(score.total.ref_words));
  std::cout << summary << "\n";

  if (!json_path.empty()) {
    json report;
    report["metric"] =
        translit_optimized ? "transliteration-optimized-wer" : "wer";
    if (translit_optimized) {
      // The relaxed equality is this toolkit's interpretation: tokens
      // match when their candidate sets (lowercased surface plus k-best
      // romanizations of native-script tokens) intersect.
      report["equality"] = "candidate-set-intersection";
      report["k"] = k;
    }
    report["wer"] = score.total.wer();
    report["substitutions"] = score.total.substitutions;
    report["insertions"] = score.total.insertions;
    report["deletions"] = score.total.deletions;
    report["ref_words"] = score.total.ref_words;
    std::vector<json> per_utterance;
    for (size_t i = 0; i < utterances.size(); ++i) {
      const WerReport &r = score.per_utterance[i];
      per_utterance.push_back(json{{"id", utterances[i].id},
                                   {"substitutions", r.substitutions},
                                   {"insertions", r.insertions},
                                   {"deletions", r.deletions},
                                   {"ref_words", r.ref_words},
                                   {"wer", r.wer()}});
    }
    report["utterances"] = per_utterance;
    auto out = OpenOutput(json_path);
    out << report.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Many-to-one transliteration toolkit: pair language model "
               "transducers, lexicon pre-processing, corpus normalization, "
               "data balancing, and transliteration-aware WER scoring"};
  app.require_subcommand(1);

  // build
  auto *build = app.add_subcommand(
      "build", "Train a transliterator bundle from a lexicon TSV");
  std::string build_lexicon, build_out, build_language;
  int build_order = 6, build_em_iters = 10, build_threads = 0;
  double build_em_tol = 1e-6;
  bool build_no_timestamp = false;
  build->add_option("lexicon", build_lexicon, "Lexicon TSV path")->required();
  build->add_option("outdir", build_out, "Output bundle directory")
      ->required();
  build->add_option("--language", build_language,
                    "Language tag (default: lexicon file stem)");
  build->add_option("--order", build_order, "N-gram order")
      ->check(CLI::Range(1, 9))
      ->capture_default_str();
  build->add_option("--em-iters", build_em_iters, "Max EM iterations")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  build->add_option("--em-tol", build_em_tol,
                    "EM log-likelihood convergence tolerance")
      ->capture_default_str();
  build->add_flag("--no-timestamp", build_no_timestamp,
                  "Omit the created= line from the manifest");
  build->add_option("--threads", build_threads,
                    "Worker threads (0 = library default)");

  // translit
  auto *translit = app.add_subcommand(
      "translit", "Transliterate words from stdin (one per line)");
  std::vector<std::string> translit_bundles;
  bool translit_reverse = false;
  int translit_k = 5;
  translit->add_option("bundles", translit_bundles, "Bundle directories")
      ->required()
      ->expected(-1);
  translit->add_flag("--reverse", translit_reverse,
                     "Decode Latin back into the native script");
  translit->add_option("--k", translit_k, "Candidates per word")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();

  // prep
  auto *prep = app.add_subcommand(
      "prep", "Lexicon pre-processing (agreement- and frequency-based)");
  std::string prep_mode, prep_out_dir;
  std::vector<std::string> prep_paths;
  prep->add_option("--mode", prep_mode, "ab, fb, or abfb")
      ->required()
      ->check(CLI::IsMember({"ab", "fb", "abfb"}));
  prep->add_option("--out-dir", prep_out_dir,
                   "Directory for the rewritten lexicons")
      ->required();
  prep->add_option("lexicons", prep_paths, "Lexicon TSV paths")
      ->required()
      ->expected(-1);

  // normalize
  auto *normalize = app.add_subcommand(
      "normalize", "Rewrite a corpus into the canonical Latin script");
  std::string norm_corpus, norm_output, norm_report;
  std::vector<std::string> norm_bundles;
  bool norm_no_passthrough = false;
  int norm_threads = 0;
  normalize->add_option("corpus", norm_corpus, "Corpus path (one transcript "
                        "per line)")
      ->required();
  normalize->add_option("bundles", norm_bundles, "Bundle directories")
      ->required()
      ->expected(-1);
  normalize->add_flag("--no-passthrough-latin", norm_no_passthrough,
                      "Push Latin tokens through the transducer too");
  normalize->add_option("--output", norm_output,
                        "Normalized corpus path (default: stdout)");
  normalize->add_option("--report", norm_report, "JSON report path");
  normalize->add_option("--threads", norm_threads,
                        "Worker threads (0 = library default)");

  // balance
  auto *balance = app.add_subcommand(
      "balance", "Compute a data-balancing plan from per-language amounts");
  std::string balance_amounts;
  double balance_cap = 75.0;
  balance->add_option("amounts", balance_amounts,
                      "TSV: language<TAB>amount per line")
      ->required();
  balance->add_option("--cap", balance_cap,
                      "Max augmentation multiplier for the smallest language")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // score
  auto *score = app.add_subcommand(
      "score", "WER scoring; with bundles, transliteration-optimized WER");
  std::string score_ref, score_hyp, score_json;
  std::vector<std::string> score_bundles;
  int score_k = 5, score_threads = 0;
  score->add_option("ref", score_ref, "Reference transcript file")
      ->required();
  score->add_option("hyp", score_hyp, "Hypothesis transcript file")
      ->required();
  score->add_option("bundles", score_bundles,
                    "Bundle directories for the relaxed token equality");
  score->add_option("--k", score_k, "Romanization candidates per token")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
  score->add_option("--json", score_json, "JSON report path");
  score->add_option("--threads", score_threads,
                    "Worker threads (0 = library default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) {
      return RunBuild(build_lexicon, build_out, build_language, build_order,
                      build_em_iters, build_em_tol, build_no_timestamp,
                      build_threads);
    }
    if (translit->parsed()) {
      return RunTranslit(translit_bundles, translit_reverse, translit_k);
    }
    if (prep->parsed()) {
      return RunPrep(prep_mode, prep_paths, prep_out_dir);
    }
    if (normalize->parsed()) {
      return RunNormalize(norm_corpus, norm_bundles, norm_no_passthrough,
                          norm_output, norm_report, norm_threads);
    }
    if (balance->parsed()) {
      return RunBalance(balance_amounts, balance_cap);
    }
    if (score->parsed()) {
      return RunScore(score_ref, score_hyp, score_bundles, score_k,
                      score_json, score_threads);
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBuild;
  }
  return kExitUsage;
}
