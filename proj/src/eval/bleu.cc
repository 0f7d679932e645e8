// Copyright 2026 The nreg Authors.
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

#include "nreg/eval/bleu.h"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "nreg/error.h"

namespace nreg {
namespace {

using NgramCounts = std::map<Tokens, int>;

NgramCounts Ngrams(const Tokens &tokens, int n) {
  NgramCounts counts;
  const int len = static_cast<int>(tokens.size());
  for (int i = 0; i + n <= len; ++i) ++counts[Tokens(tokens.begin() + i, tokens.begin() + i + n)];
  return counts;
}

}  // namespace

BleuStats &BleuStats::operator+=(const BleuStats &o) {
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    matches[n] += o.matches[n];
    totals[n] += o.totals[n];
  }
  candidate_length += o.candidate_length;
  reference_length += o.reference_length;
  return *this;
}

BleuStats SentenceStats(const Tokens &candidate, const std::vector<Tokens> &references,
                        int max_n) {
  if (references.empty()) throw ContractError("candidate without reference");
  if (max_n < 1 || max_n > kBleuMaxOrder) throw ContractError("BLEU order out of range");
  BleuStats s;
  s.candidate_length = static_cast<double>(candidate.size());
  long best = -1;
  for (const Tokens &ref : references) {
    const long diff = std::labs(static_cast<long>(ref.size()) - static_cast<long>(candidate.size()));
    const long best_diff =
        best < 0 ? -1 : std::labs(best - static_cast<long>(candidate.size()));
    if (best < 0 || diff < best_diff || (diff == best_diff && static_cast<long>(ref.size()) < best)) {
      best = static_cast<long>(ref.size());
    }
  }
  s.reference_length = static_cast<double>(best);
  for (int n = 1; n <= max_n; ++n) {
    const NgramCounts cand = Ngrams(candidate, n);
    NgramCounts max_ref;
    for (const Tokens &ref : references) {
      for (const auto &[gram, count] : Ngrams(ref, n)) {
        int &m = max_ref[gram];
        m = std::max(m, count);
      }
    }
    for (const auto &[gram, count] : cand) {
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) s.matches[n - 1] += std::min(count, it->second);
      s.totals[n - 1] += count;
    }
  }
  return s;
}

BleuScore BleuFromStats(const BleuStats &stats, int max_n) {
  BleuScore b;
  double log_sum = 0;
  bool zero = false;
  for (int n = 0; n < max_n; ++n) {
    b.precisions[n] = stats.totals[n] > 0 ? stats.matches[n] / stats.totals[n] : 0.0;
    if (b.precisions[n] == 0) zero = true;
    else log_sum += std::log(b.precisions[n]);
  }
  const double c = stats.candidate_length, r = stats.reference_length;
  b.brevity_penalty = c == 0 ? 0.0 : c > r ? 1.0 : std::exp(1.0 - r / c);
  b.score = zero ? 0.0 : 100.0 * b.brevity_penalty * std::exp(log_sum / max_n);
  return b;
}

BleuScore CorpusBleu(const std::vector<Tokens> &candidates,
                     const std::vector<std::vector<Tokens>> &references, int max_n) {
  if (candidates.empty()) throw ContractError("BLEU of an empty corpus");
  if (candidates.size() != references.size()) {
    throw ContractError("BLEU candidates and references differ in length: " +
                        std::to_string(candidates.size()) + " vs " +
                        std::to_string(references.size()));
  }
  BleuStats total;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    total += SentenceStats(candidates[i], references[i], max_n);
  }
  return BleuFromStats(total, max_n);
}

BleuScore CorpusBleu(const std::vector<Tokens> &candidates, const std::vector<Tokens> &references,
                     int max_n) {
  std::vector<std::vector<Tokens>> refs;
  refs.reserve(references.size());
  for (const Tokens &r : references) refs.push_back({r});
  return CorpusBleu(candidates, refs, max_n);
}

}  // namespace nreg
