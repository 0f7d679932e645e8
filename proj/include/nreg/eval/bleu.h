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

#ifndef NREG_EVAL_BLEU_H_
#define NREG_EVAL_BLEU_H_

#include <array>
#include <vector>

#include "nreg/corpus/text.h"

namespace nreg {

inline constexpr int kBleuMaxOrder = 4;

// Sufficient statistics of one candidate: clipped n-gram matches, candidate
// n-gram totals and lengths. Corpus BLEU depends only on their sums.
struct BleuStats {
  std::array<double, kBleuMaxOrder> matches{};
  std::array<double, kBleuMaxOrder> totals{};
  double candidate_length = 0;
  double reference_length = 0;  // closest reference length, shorter on ties

  BleuStats &operator+=(const BleuStats &o);
};

// Counts are clipped by the maximum count in any single reference.
BleuStats SentenceStats(const Tokens &candidate, const std::vector<Tokens> &references,
                        int max_n = kBleuMaxOrder);

struct BleuScore {
  double score = 0.0;  // 0..100
  std::array<double, kBleuMaxOrder> precisions{};
  double brevity_penalty = 0.0;
};

// Geometric mean of the modified precisions times the brevity penalty,
// without smoothing. A zero precision (including an order with no candidate
// n-grams) gives 0.
BleuScore BleuFromStats(const BleuStats &stats, int max_n = kBleuMaxOrder);

// Corpus BLEU with one or more references per candidate. Throws
// ContractError on an empty or misaligned corpus.
BleuScore CorpusBleu(const std::vector<Tokens> &candidates,
                     const std::vector<std::vector<Tokens>> &references, int max_n = kBleuMaxOrder);

// Single-reference convenience overload.
BleuScore CorpusBleu(const std::vector<Tokens> &candidates, const std::vector<Tokens> &references,
                     int max_n = kBleuMaxOrder);

}  // namespace nreg

#endif  // NREG_EVAL_BLEU_H_
