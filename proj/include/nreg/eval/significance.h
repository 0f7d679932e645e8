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

#ifndef NREG_EVAL_SIGNIFICANCE_H_
#define NREG_EVAL_SIGNIFICANCE_H_

#include <cstdint>
#include <vector>

#include "nreg/eval/bleu.h"

namespace nreg {

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  int n = 0;              // discordant pairs or non-zero differences
  bool exact = false;     // p from full enumeration
  bool degenerate = false;  // nothing to compare; p = 1
};

// ((|b - c| - 1)^2) / (b + c) against chi-square with one degree of freedom.
// b + c == 0 gives p = 1.
TestResult McNemar(int b, int c);

// b counts pairs where only `a` is correct, c pairs where only `b` is.
TestResult McNemar(const std::vector<bool> &a, const std::vector<bool> &b);

// Two-sided signed-rank test on x - y. Zero differences are dropped and tied
// magnitudes share their average rank. Exact for n <= 25, otherwise the
// normal approximation with tie correction. The statistic is
// min(W+, W-).
TestResult Wilcoxon(const std::vector<double> &x, const std::vector<double> &y);

inline constexpr int kWilcoxonExactLimit = 25;

// min(1, p * m). Throws ContractError when m is smaller than the number of
// p-values.
std::vector<double> Bonferroni(const std::vector<double> &p_values, int m);

struct BleuSignificance {
  double delta = 0.0;  // BLEU(a) - BLEU(b)
  double p_value = 1.0;
  double ci_low = 0.0;   // bootstrap percentile interval on delta
  double ci_high = 0.0;
  int iterations = 0;
};

// Approximate randomization over texts: each iteration swaps every text's
// pair of outputs with probability 1/2 and recomputes the corpus BLEU
// difference; p = (#{|delta_perm| >= |delta|} + 1) / (iterations + 1).
// Bootstrap resampling of texts (the same number of iterations) gives a
// `confidence` interval on delta. Throws ContractError for fewer than 1000
// iterations or misaligned inputs.
BleuSignificance BleuRandomization(const std::vector<BleuStats> &a,
                                   const std::vector<BleuStats> &b, int iterations,
                                   std::uint64_t seed, double confidence = 0.95);

}  // namespace nreg

#endif  // NREG_EVAL_SIGNIFICANCE_H_
