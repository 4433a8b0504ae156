// pair-align.cc
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

#include "translit/pair-align.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "translit/utf8.h"

namespace translit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kProbFloor = 1e-12;

std::string SideToken(const std::string &side) {
  return side.empty() ? kEpsilonToken : side;
}

std::string SideFromToken(std::string_view token) {
  return token == kEpsilonToken ? std::string() : std::string(token);
}

struct DecodedEntry {
  std::vector<std::string> native;
  std::vector<std::string> latin;
  double count;
};

DecodedEntry Decode(const LexEntry &entry) {
  return DecodedEntry{SplitCodepoints(entry.native),
                      SplitCodepoints(entry.latin), entry.count};
}

// Forward probabilities over the monotone edit lattice; alpha(i,j) is the
// total probability of aligning the first i native and j latin codepoints.
struct Lattice {
  int rows, cols;  // native length + 1, latin length + 1
  std::vector<double> alpha;
  double &At(int i, int j) { return alpha[i * cols + j]; }
  double At(int i, int j) const { return alpha[i * cols + j]; }
};

Lattice Forward(const AlignmentModel &model, const DecodedEntry &entry) {
  Lattice lat;
  lat.rows = static_cast<int>(entry.native.size()) + 1;
  lat.cols = static_cast<int>(entry.latin.size()) + 1;
  lat.alpha.assign(static_cast<size_t>(lat.rows) * lat.cols, 0.0);
  lat.At(0, 0) = 1.0;
  for (int i = 0; i < lat.rows; ++i) {
    for (int j = 0; j < lat.cols; ++j) {
      double a = lat.At(i, j);
      if (a == 0.0) continue;
      if (i + 1 < lat.rows && j + 1 < lat.cols) {
        lat.At(i + 1, j + 1) +=
            a * model.Prob({entry.native[i], entry.latin[j]});
      }
      if (i + 1 < lat.rows) {
        lat.At(i + 1, j) += a * model.Prob({entry.native[i], ""});
      }
      if (j + 1 < lat.cols) {
        lat.At(i, j + 1) += a * model.Prob({"", entry.latin[j]});
      }
    }
  }
  return lat;
}

Lattice Backward(const AlignmentModel &model, const DecodedEntry &entry) {
  Lattice lat;
  lat.rows = static_cast<int>(entry.native.size()) + 1;
  lat.cols = static_cast<int>(entry.latin.size()) + 1;
  lat.alpha.assign(static_cast<size_t>(lat.rows) * lat.cols, 0.0);
  lat.At(lat.rows - 1, lat.cols - 1) = 1.0;
  for (int i = lat.rows - 1; i >= 0; --i) {
    for (int j = lat.cols - 1; j >= 0; --j) {
      double b = lat.At(i, j);
      if (b == 0.0) continue;
      if (i > 0 && j > 0) {
        lat.At(i - 1, j - 1) +=
            b * model.Prob({entry.native[i - 1], entry.latin[j - 1]});
      }
      if (i > 0) {
        lat.At(i - 1, j) += b * model.Prob({entry.native[i - 1], ""});
      }
      if (j > 0) {
        lat.At(i, j - 1) += b * model.Prob({"", entry.latin[j - 1]});
      }
    }
  }
  return lat;
}

// Posterior expected counts for one entry; false when the total mass
// underflowed (or the pair is unalignable under the model).
bool AccumulateEntry(const AlignmentModel &model, const DecodedEntry &entry,
                     std::map<PairSymbol, double> *counts,
                     double *log_likelihood) {
  Lattice alpha = Forward(model, entry);
  double total = alpha.At(alpha.rows - 1, alpha.cols - 1);
  if (total <= 0.0 || !std::isfinite(total)) return false;
  Lattice beta = Backward(model, entry);
  double inv = 1.0 / total;
  for (int i = 0; i < alpha.rows; ++i) {
    for (int j = 0; j < alpha.cols; ++j) {
      double a = alpha.At(i, j);
      if (a == 0.0) continue;
      if (i + 1 < alpha.rows && j + 1 < alpha.cols) {
        PairSymbol pair{entry.native[i], entry.latin[j]};
        double p = a * model.Prob(pair) * beta.At(i + 1, j + 1) * inv;
        if (p > 0.0) (*counts)[pair] += entry.count * p;
      }
      if (i + 1 < alpha.rows) {
        PairSymbol pair{entry.native[i], ""};
        double p = a * model.Prob(pair) * beta.At(i + 1, j) * inv;
        if (p > 0.0) (*counts)[pair] += entry.count * p;
      }
      if (j + 1 < alpha.cols) {
        PairSymbol pair{"", entry.latin[j]};
        double p = a * model.Prob(pair) * beta.At(i, j + 1) * inv;
        if (p > 0.0) (*counts)[pair] += entry.count * p;
      }
    }
  }
  *log_likelihood += entry.count * std::log(total);
  return true;
}

// Pair symbols usable by some monotone alignment of some entry.
std::map<PairSymbol, double> ReachablePairs(
    const std::vector<DecodedEntry> &decoded) {
  std::map<PairSymbol, double> reachable;
  for (const DecodedEntry &entry : decoded) {
    for (const std::string &c : entry.native) {
      reachable[{c, ""}] = 0.0;
      for (const std::string &d : entry.latin) reachable[{c, d}] = 0.0;
    }
    for (const std::string &d : entry.latin) reachable[{"", d}] = 0.0;
  }
  return reachable;
}

}  // namespace

std::string ToString(const PairSymbol &pair) {
  return SideToken(pair.input) + ":" + SideToken(pair.output);
}

PairSymbol PairSymbolFromString(std::string_view token) {
  // The separator is the first ':' that is not inside the <eps> marker;
  // sides are single codepoints, so ':' as a side is itself a codepoint.
  std::string s(token);
  size_t sep = std::string::npos;
  if (s.rfind("<eps>:", 0) == 0) {
    sep = 5;
  } else {
    auto cps = SplitCodepoints(s);
    size_t offset = 0;
    for (size_t i = 0; i < cps.size(); ++i) {
      if (i > 0 && cps[i] == ":") {
        sep = offset;
        break;
      }
      offset += cps[i].size();
    }
  }
  if (sep == std::string::npos) {
    throw ParseError("bad pair symbol \"" + s + "\"");
  }
  PairSymbol pair{SideFromToken(s.substr(0, sep)),
                  SideFromToken(s.substr(sep + 1))};
  if (pair.input.empty() && pair.output.empty()) {
    throw ParseError("pair symbol with two empty sides: \"" + s + "\"");
  }
  return pair;
}

double AlignmentModel::Prob(const PairSymbol &pair) const {
  auto it = probs_.find(pair);
  return it == probs_.end() ? 0.0 : it->second;
}

void AlignmentModel::Set(const PairSymbol &pair, double prob) {
  probs_[pair] = prob;
}

double AlignmentModel::TotalMass() const {
  double total = 0.0;
  for (const auto &[pair, prob] : probs_) total += prob;
  return total;
}

void AlignmentModel::Write(std::ostream &out) const {
  for (const auto &[pair, prob] : probs_) {
    out << SideToken(pair.input) << '\t' << SideToken(pair.output) << '\t'
        << FormatDouble(prob) << '\n';
  }
}

AlignmentModel AlignmentModel::Read(std::istream &in) {
  AlignmentModel model;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError("alignment model line " + std::to_string(lineno) +
                       ": expected input<TAB>output<TAB>probability");
    }
    model.Set({SideFromToken(fields[0]), SideFromToken(fields[1])},
              ParseDouble(fields[2]));
  }
  return model;
}

namespace {

EStepStats ExpectationCountsImpl(const AlignmentModel &model,
                                 const std::vector<LexEntry> &entries,
                                 bool parallel) {
  int n = static_cast<int>(entries.size());
  int buckets = 1;
#ifdef _OPENMP
  if (parallel) {
    buckets = std::max(1, std::min(n, omp_get_max_threads()));
  }
#endif
  std::vector<EStepStats> partial(buckets);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(buckets) if (parallel)
#endif
  for (int i = 0; i < n; ++i) {
    int bucket = 0;
#ifdef _OPENMP
    bucket = omp_get_thread_num();
#endif
    EStepStats &stats = partial[bucket];
    DecodedEntry decoded = Decode(entries[i]);
    if (!AccumulateEntry(model, decoded, &stats.counts,
                         &stats.log_likelihood)) {
      ++stats.skipped_entries;
    }
  }
  EStepStats merged = std::move(partial[0]);
  for (int b = 1; b < buckets; ++b) {
    for (const auto &[pair, count] : partial[b].counts) {
      merged.counts[pair] += count;
    }
    merged.log_likelihood += partial[b].log_likelihood;
    merged.skipped_entries += partial[b].skipped_entries;
  }
  return merged;
}

}  // namespace

EStepStats ExpectationCounts(const AlignmentModel &model,
                             const std::vector<LexEntry> &entries) {
  return ExpectationCountsImpl(model, entries, true);
}

EStepStats ExpectationCountsSerial(const AlignmentModel &model,
                                   const std::vector<LexEntry> &entries) {
  return ExpectationCountsImpl(model, entries, false);
}

EmResult EmTrain(const std::vector<LexEntry> &entries,
                 const EmOptions &options) {
  if (entries.empty()) throw BuildError("EmTrain: no entries");
  std::vector<DecodedEntry> decoded;
  decoded.reserve(entries.size());
  for (const LexEntry &entry : entries) {
    if (entry.count <= 0.0) {
      throw BuildError("EmTrain: nonpositive count for \"" + entry.native +
                       "\"");
    }
    decoded.push_back(Decode(entry));
    if (decoded.back().native.empty() && decoded.back().latin.empty()) {
      throw BuildError("EmTrain: entry with no codepoints on either side");
    }
  }

  std::map<PairSymbol, double> reachable = ReachablePairs(decoded);
  if (reachable.empty()) throw BuildError("EmTrain: no alignable material");

  EmResult result;
  double uniform = 1.0 / static_cast<double>(reachable.size());
  for (auto &[pair, prob] : reachable) {
    result.model.Set(pair, uniform);
  }

  double previous_ll = kNegInf;
  for (int iter = 0; iter < options.max_iters; ++iter) {
    EStepStats stats = options.parallel
                           ? ExpectationCounts(result.model, entries)
                           : ExpectationCountsSerial(result.model, entries);
    result.skipped_entries = stats.skipped_entries;

    // M-step: renormalize expected counts, then floor every reachable
    // pair so Viterbi never faces an all-zero lattice on training data.
    double total = 0.0;
    for (const auto &[pair, count] : stats.counts) total += count;
    if (total <= 0.0) {
      throw BuildError("EmTrain: all entries unalignable or underflowed");
    }
    AlignmentModel next;
    double floored_total = 0.0;
    for (const auto &[pair, unused] : reachable) {
      auto it = stats.counts.find(pair);
      double p = it == stats.counts.end() ? 0.0 : it->second / total;
      p = std::max(p, kProbFloor);
      next.Set(pair, p);
      floored_total += p;
    }
    AlignmentModel renormed;
    for (const auto &[pair, prob] : next.probs()) {
      renormed.Set(pair, prob / floored_total);
    }
    result.model = std::move(renormed);
    result.log_likelihoods.push_back(stats.log_likelihood);
    if (options.observer) {
      options.observer(iter, result.model, stats.log_likelihood);
    }
    if (iter > 0 && stats.log_likelihood - previous_ll < options.tol) {
      break;
    }
    previous_ll = stats.log_likelihood;
  }
  return result;
}

AlignedPair ViterbiAlign(const AlignmentModel &model,
                         const std::string &native_word,
                         const std::string &latin_word) {
  std::vector<std::string> native = SplitCodepoints(native_word);
  std::vector<std::string> latin = SplitCodepoints(latin_word);
  int rows = static_cast<int>(native.size()) + 1;
  int cols = static_cast<int>(latin.size()) + 1;

  // DP in log domain; back[i][j] records the winning move into (i,j):
  // 1 match, 2 deletion, 3 insertion. Candidates are tried in that order
  // and replaced only on strict improvement.
  std::vector<double> best(static_cast<size_t>(rows) * cols, kNegInf);
  std::vector<int8_t> back(static_cast<size_t>(rows) * cols, 0);
  auto idx = [cols](int i, int j) { return static_cast<size_t>(i) * cols + j; };
  best[idx(0, 0)] = 0.0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (i == 0 && j == 0) continue;
      double score = kNegInf;
      int8_t move = 0;
      if (i > 0 && j > 0) {
        double p = model.Prob({native[i - 1], latin[j - 1]});
        if (p > 0.0) {
          double s = best[idx(i - 1, j - 1)] + std::log(p);
          if (s > score) {
            score = s;
            move = 1;
          }
        }
      }
      if (i > 0) {
        double p = model.Prob({native[i - 1], ""});
        if (p > 0.0) {
          double s = best[idx(i - 1, j)] + std::log(p);
          if (s > score) {
            score = s;
            move = 2;
          }
        }
      }
      if (j > 0) {
        double p = model.Prob({"", latin[j - 1]});
        if (p > 0.0) {
          double s = best[idx(i, j - 1)] + std::log(p);
          if (s > score) {
            score = s;
            move = 3;
          }
        }
      }
      best[idx(i, j)] = score;
      back[idx(i, j)] = move;
    }
  }

  if (best[idx(rows - 1, cols - 1)] == kNegInf) {
    throw UnalignableError("no nonzero-probability alignment for \"" +
                           native_word + "\" / \"" + latin_word + "\"");
  }

  AlignedPair aligned;
  aligned.native_word = native_word;
  aligned.latin_word = latin_word;
  int i = rows - 1, j = cols - 1;
  while (i != 0 || j != 0) {
    switch (back[idx(i, j)]) {
      case 1:
        aligned.pairs.push_back({native[i - 1], latin[j - 1]});
        --i;
        --j;
        break;
      case 2:
        aligned.pairs.push_back({native[i - 1], ""});
        --i;
        break;
      case 3:
        aligned.pairs.push_back({"", latin[j - 1]});
        --j;
        break;
      default:
        throw Error("ViterbiAlign: corrupt backtrace");
    }
  }
  std::reverse(aligned.pairs.begin(), aligned.pairs.end());
  return aligned;
}

double AlignmentLikelihood(const AlignmentModel &model,
                           const std::string &native_word,
                           const std::string &latin_word) {
  DecodedEntry entry{SplitCodepoints(native_word), SplitCodepoints(latin_word),
                     1.0};
  Lattice alpha = Forward(model, entry);
  double total = alpha.At(alpha.rows - 1, alpha.cols - 1);
  return total > 0.0 ? std::log(total) : kNegInf;
}

}  // namespace translit
