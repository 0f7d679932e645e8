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

#include "nreg/eval/metrics.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "nreg/error.h"

namespace nreg {
namespace {

void CheckAligned(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ContractError("predictions and golds differ in length: " + std::to_string(a) + " vs " +
                        std::to_string(b));
  }
}

bool SameLowercased(const Tokens &a, const Tokens &b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(),
                    [](const std::string &x, const std::string &y) { return Lowercase(x) == Lowercase(y); });
}

std::vector<std::uint32_t> CodePoints(std::string_view s) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b = static_cast<unsigned char>(s[i]);
    const int extra = (b & 0xE0) == 0xC0 ? 1 : (b & 0xF0) == 0xE0 ? 2 : (b & 0xF8) == 0xF0 ? 3 : 0;
    std::uint32_t cp = extra == 0 ? b : b & (0x3F >> extra);
    bool ok = b < 0x80 || extra > 0;
    for (int k = 1; ok && k <= extra; ++k) {
      const std::size_t at = i + static_cast<std::size_t>(k);
      if (at >= s.size() || (static_cast<unsigned char>(s[at]) & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (static_cast<unsigned char>(s[at]) & 0x3F);
      }
    }
    if (ok) {
      out.push_back(cp);
      i += static_cast<std::size_t>(extra) + 1;
    } else {
      out.push_back(0x110000u + b);  // outside the code point range
      ++i;
    }
  }
  return out;
}

template <typename Seq>
int Levenshtein(const Seq &a, const Seq &b) {
  std::vector<int> row(b.size() + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const int up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

double Accuracy(const std::vector<Tokens> &predictions, const std::vector<Tokens> &golds) {
  CheckAligned(predictions.size(), golds.size());
  if (golds.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < golds.size(); ++i) hits += SameLowercased(predictions[i], golds[i]);
  return static_cast<double>(hits) / static_cast<double>(golds.size());
}

int EditDistance(std::string_view a, std::string_view b) {
  return Levenshtein(CodePoints(a), CodePoints(b));
}

int TokenEditDistance(const Tokens &a, const Tokens &b) { return Levenshtein(a, b); }

int RefexEditDistance(const Tokens &prediction, const Tokens &gold) {
  return EditDistance(Lowercase(Join(prediction)), Lowercase(Join(gold)));
}

SedSummary StringEditDistance(const std::vector<Tokens> &predictions,
                              const std::vector<Tokens> &golds) {
  CheckAligned(predictions.size(), golds.size());
  SedSummary s;
  if (golds.empty()) return s;
  double total = 0, wrong_total = 0, tokens = 0;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const int d = RefexEditDistance(predictions[i], golds[i]);
    total += d;
    tokens += TokenEditDistance(Lowercase(predictions[i]), Lowercase(golds[i]));
    if (!SameLowercased(predictions[i], golds[i])) {
      ++s.incorrect;
      wrong_total += d;
    }
  }
  const double n = static_cast<double>(golds.size());
  s.all = total / n;
  s.tokens = tokens / n;
  s.incorrect_only = s.incorrect > 0 ? wrong_total / static_cast<double>(s.incorrect) : 0.0;
  return s;
}

bool IsPronoun(const Tokens &refex) {
  return !refex.empty() && ClassifyForm(refex) == Form::kPronoun;
}

PronounMetrics ComputePronounMetrics(const std::vector<Tokens> &predictions,
                                     const std::vector<Tokens> &golds) {
  CheckAligned(predictions.size(), golds.size());
  PronounMetrics m;
  int exact = 0;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const bool gold = IsPronoun(golds[i]);
    const bool pred = IsPronoun(predictions[i]);
    if (gold) {
      ++m.gold_pronouns;
      exact += SameLowercased(predictions[i], golds[i]);
    }
    m.true_positives += gold && pred;
    m.false_positives += !gold && pred;
    m.false_negatives += gold && !pred;
  }
  auto ratio = [&](double num, double den) {
    if (den == 0) {
      m.undefined = true;
      return 0.0;
    }
    return num / den;
  };
  m.accuracy = ratio(exact, m.gold_pronouns);
  m.precision = ratio(m.true_positives, m.true_positives + m.false_positives);
  m.recall = ratio(m.true_positives, m.true_positives + m.false_negatives);
  m.f1 = ratio(2 * m.precision * m.recall, m.precision + m.recall);
  return m;
}

}  // namespace nreg
