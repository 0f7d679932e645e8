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

#include "nreg/eval/report.h"

#include <cstdio>
#include <ostream>

#include "nreg/error.h"
#include "nreg/eval/bleu.h"
#include "nreg/eval/significance.h"

namespace nreg {
namespace {

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string General(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<Tokens> Candidates(const std::vector<TextPair> &texts) {
  std::vector<Tokens> out;
  for (const auto &t : texts) out.push_back(t.candidate);
  return out;
}

std::vector<Tokens> References(const std::vector<TextPair> &texts) {
  std::vector<Tokens> out;
  for (const auto &t : texts) out.push_back(t.reference);
  return out;
}

std::string Pad(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

EvalReport Evaluate(const SystemOutput &system, const std::vector<Tokens> &golds) {
  EvalReport r;
  r.system = system.name;
  r.instances = golds.size();
  r.accuracy = Accuracy(system.predictions, golds);
  r.sed = StringEditDistance(system.predictions, golds);
  r.pronoun = ComputePronounMetrics(system.predictions, golds);
  r.texts = system.texts.size();
  if (!system.texts.empty()) {
    r.text_accuracy = TextAccuracy(system.texts);
    r.bleu = CorpusBleu(Candidates(system.texts), References(system.texts)).score;
  }
  return r;
}

std::vector<SignificanceRow> CompareSystems(const std::vector<SystemOutput> &systems,
                                            const std::vector<Tokens> &golds, int iterations,
                                            std::uint64_t seed) {
  const int n = static_cast<int>(systems.size());
  const int pairs = n * (n - 1) / 2;
  std::vector<SignificanceRow> rows;
  if (pairs == 0) return rows;

  std::vector<std::vector<bool>> correct(n);
  std::vector<std::vector<double>> sed(n);
  std::vector<std::vector<BleuStats>> stats(n);
  for (int s = 0; s < n; ++s) {
    const auto &preds = systems[s].predictions;
    if (preds.size() != golds.size()) {
      throw ContractError("system " + systems[s].name + " is not aligned with the golds");
    }
    for (std::size_t i = 0; i < golds.size(); ++i) {
      correct[s].push_back(Accuracy({preds[i]}, {golds[i]}) == 1.0);
      sed[s].push_back(RefexEditDistance(preds[i], golds[i]));
    }
    for (const auto &t : systems[s].texts) stats[s].push_back(SentenceStats(t.candidate, {t.reference}));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const std::string &na = systems[a].name, &nb = systems[b].name;
      TestResult m = McNemar(correct[a], correct[b]);
      rows.push_back({na, nb, "accuracy", m.statistic, m.p_value, 1.0});
      TestResult w = Wilcoxon(sed[a], sed[b]);
      rows.push_back({na, nb, "sed", w.statistic, w.p_value, 1.0});
      if (!stats[a].empty()) {
        for (std::size_t t = 0; t < systems[a].texts.size(); ++t) {
          if (t >= systems[b].texts.size() ||
              systems[a].texts[t].text_id != systems[b].texts[t].text_id) {
            throw ContractError("texts of " + na + " and " + nb + " are not aligned");
          }
        }
        BleuSignificance r = BleuRandomization(stats[a], stats[b], iterations, seed);
        rows.push_back({na, nb, "bleu", r.delta, r.p_value, 1.0, r.ci_low, r.ci_high});
      }
    }
  }
  for (auto &row : rows) row.p_bonferroni = Bonferroni({row.p_raw}, pairs)[0];
  return rows;
}

void WriteReportTsv(std::ostream &out, const std::vector<EvalReport> &reports) {
  out << "system\tinstances\taccuracy\tsed\tsed_incorrect\tsed_tokens\tpronoun_accuracy\t"
         "pronoun_precision\tpronoun_recall\tpronoun_f1\tpronoun_undefined\ttexts\t"
         "text_accuracy\tbleu\n";
  for (const auto &r : reports) {
    out << r.system << '\t' << r.instances << '\t' << Fixed(r.accuracy) << '\t' << Fixed(r.sed.all)
        << '\t' << Fixed(r.sed.incorrect_only) << '\t' << Fixed(r.sed.tokens) << '\t'
        << Fixed(r.pronoun.accuracy) << '\t' << Fixed(r.pronoun.precision) << '\t'
        << Fixed(r.pronoun.recall) << '\t' << Fixed(r.pronoun.f1) << '\t'
        << (r.pronoun.undefined ? 1 : 0) << '\t' << r.texts << '\t' << Fixed(r.text_accuracy)
        << '\t' << Fixed(r.bleu, 2) << '\n';
  }
}

void WriteReportTable(std::ostream &out, const std::vector<EvalReport> &reports) {
  std::size_t w = 6;
  for (const auto &r : reports) w = std::max(w, r.system.size());
  out << Pad("", w) << " | All References | Pronouns                    | Text\n";
  out << Pad("System", w) << " | Acc.   SED    | Acc.   Prec.  Rec.   F1     | Acc.   BLEU\n";
  out << std::string(w, '-') << "-+----------------+-----------------------------+--------------\n";
  for (const auto &r : reports) {
    out << Pad(r.system, w) << " | " << Fixed(r.accuracy, 2) << "   " << Pad(Fixed(r.sed.all, 2), 6)
        << " | " << Fixed(r.pronoun.accuracy, 2) << "   " << Fixed(r.pronoun.precision, 2) << "   "
        << Fixed(r.pronoun.recall, 2) << "   " << Fixed(r.pronoun.f1, 2) << "   | "
        << Fixed(r.text_accuracy, 2) << "   " << Fixed(r.bleu, 2) << '\n';
  }
}

void WriteSignificanceTsv(std::ostream &out, const std::vector<SignificanceRow> &rows) {
  out << "system_a\tsystem_b\tmetric\tstatistic\tp_raw\tp_bonferroni\tci_low\tci_high\n";
  for (const auto &r : rows) {
    const bool bleu = r.metric == "bleu";
    out << r.system_a << '\t' << r.system_b << '\t' << r.metric << '\t' << General(r.statistic)
        << '\t' << General(r.p_raw) << '\t' << General(r.p_bonferroni) << '\t'
        << (bleu ? General(r.ci_low) : "-") << '\t' << (bleu ? General(r.ci_high) : "-") << '\n';
  }
}

}  // namespace nreg
