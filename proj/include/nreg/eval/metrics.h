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

#ifndef NREG_EVAL_METRICS_H_
#define NREG_EVAL_METRICS_H_

#include <string_view>
#include <vector>

#include "nreg/corpus/instance.h"

namespace nreg {

// Fraction of positions where the lowercased token sequences agree. Throws
// ContractError on a length mismatch; empty lists score 0.
double Accuracy(const std::vector<Tokens> &predictions, const std::vector<Tokens> &golds);

// Levenshtein distance with unit costs over Unicode code points. Invalid
// UTF-8 bytes count as one character each.
int EditDistance(std::string_view a, std::string_view b);

// Levenshtein distance over tokens.
int TokenEditDistance(const Tokens &a, const Tokens &b);

// Character distance between the space-joined, lowercased sequences.
int RefexEditDistance(const Tokens &prediction, const Tokens &gold);

struct SedSummary {
  double all = 0.0;             // mean over every instance
  double incorrect_only = 0.0;  // mean over instances that are not exact matches
  double tokens = 0.0;          // token-level mean over every instance
  std::size_t incorrect = 0;
};

SedSummary StringEditDistance(const std::vector<Tokens> &predictions,
                              const std::vector<Tokens> &golds);

struct PronounMetrics {
  double accuracy = 0.0;   // exact match over gold pronouns
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int gold_pronouns = 0;
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;
  // Set when a denominator was zero and the value was reported as 0.
  bool undefined = false;
};

// ClassifyForm says pronoun. An empty refex is not a pronoun.
bool IsPronoun(const Tokens &refex);

// Pronoun is the positive class.
PronounMetrics ComputePronounMetrics(const std::vector<Tokens> &predictions,
                                     const std::vector<Tokens> &golds);

}  // namespace nreg

#endif  // NREG_EVAL_METRICS_H_
