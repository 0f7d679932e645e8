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

#ifndef NREG_EVAL_REPORT_H_
#define NREG_EVAL_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nreg/eval/metrics.h"
#include "nreg/eval/relexicalize.h"

namespace nreg {

// One system's predictions, aligned with the gold instances, and its
// relexicalized texts.
struct SystemOutput {
  std::string name;
  std::vector<Tokens> predictions;
  std::vector<TextPair> texts;
};

struct EvalReport {
  std::string system;
  std::size_t instances = 0;
  double accuracy = 0.0;
  SedSummary sed;
  PronounMetrics pronoun;
  std::size_t texts = 0;
  double text_accuracy = 0.0;
  double bleu = 0.0;
};

EvalReport Evaluate(const SystemOutput &system, const std::vector<Tokens> &golds);

struct SignificanceRow {
  std::string system_a;
  std::string system_b;
  std::string metric;  // "accuracy", "sed" or "bleu"
  double statistic = 0.0;
  double p_raw = 1.0;
  double p_bonferroni = 1.0;
  // Bootstrap interval on the BLEU difference; unused for other metrics.
  double ci_low = 0.0;
  double ci_high = 0.0;
};

// Every unordered pair of systems under McNemar (accuracy), Wilcoxon (SED)
// and approximate randomization (BLEU, skipped when there are no texts).
// p-values are Bonferroni-adjusted by the number of pairs.
std::vector<SignificanceRow> CompareSystems(const std::vector<SystemOutput> &systems,
                                            const std::vector<Tokens> &golds,
                                            int iterations = 10000, std::uint64_t seed = 1);

void WriteReportTsv(std::ostream &out, const std::vector<EvalReport> &reports);

// Fixed-width table grouped as All References | Pronouns | Text.
void WriteReportTable(std::ostream &out, const std::vector<EvalReport> &reports);

// Columns: system_a system_b metric statistic p_raw p_bonferroni ci_low
// ci_high. The interval columns are "-" outside BLEU rows.
void WriteSignificanceTsv(std::ostream &out, const std::vector<SignificanceRow> &rows);

}  // namespace nreg

#endif  // NREG_EVAL_REPORT_H_
