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

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include <gtest/gtest.h>

#include "nreg/corpus/template_file.h"
#include "nreg/error.h"
#include "nreg/eval/bleu.h"
#include "nreg/eval/metrics.h"
#include "nreg/eval/relexicalize.h"
#include "nreg/eval/report.h"
#include "nreg/eval/significance.h"
#include "nreg/tensor/rng.h"
#include "testing/fixtures.h"

namespace nreg {
namespace {

Tokens T(std::string_view s) { return SplitWhitespace(s); }

// ---------------------------------------------------------------------------
// Accuracy and edit distance

TEST(AccuracyTest, Examples) {
  std::vector<Tokens> g = {T("Alpha"), T("it"), T("the tower"), T("Beta Bridge")};
  EXPECT_DOUBLE_EQ(Accuracy(g, g), 1.0);
  EXPECT_DOUBLE_EQ(Accuracy({T("x"), T("y"), T("z"), T("w")}, g), 0.0);
  EXPECT_DOUBLE_EQ(Accuracy({T("ALPHA"), T("It"), T("the tower"), T("Beta")}, g), 0.75);
  EXPECT_THROW(Accuracy({T("x")}, g), ContractError);
}

TEST(AccuracyTest, InvariantUnderPermutation) {
  Rng rng(3);
  std::vector<Tokens> p, g;
  for (int i = 0; i < 40; ++i) {
    g.push_back({std::string(1, static_cast<char>('a' + rng.Below(3)))});
    p.push_back({std::string(1, static_cast<char>('a' + rng.Below(3)))});
  }
  const double a = Accuracy(p, g);
  std::vector<int> idx(40);
  for (int i = 0; i < 40; ++i) idx[i] = i;
  rng.Shuffle(idx);
  std::vector<Tokens> p2, g2;
  for (int i : idx) {
    p2.push_back(p[i]);
    g2.push_back(g[i]);
  }
  EXPECT_DOUBLE_EQ(Accuracy(p2, g2), a);
}

TEST(EditDistanceTest, Examples) {
  EXPECT_EQ(EditDistance("", "abc"), 3);
  EXPECT_EQ(EditDistance("abc", ""), 3);
  EXPECT_EQ(EditDistance("same", "same"), 0);
  EXPECT_EQ(EditDistance("kitten", "sitting"), 3);
  EXPECT_EQ(EditDistance("caf\xC3\xA9", "cafe"), 1);  // one code point
  EXPECT_EQ(EditDistance("\xFF", "a"), 1);
  EXPECT_EQ(TokenEditDistance(T("the big tower"), T("the tower")), 1);
  EXPECT_EQ(RefexEditDistance(T("The Tower"), T("the tower")), 0);
}

// Shortest edit script by breadth-first search over all strings of length
// <= 5 on {a, b, c}.
std::map<std::pair<std::string, std::string>, int> ScriptOracle() {
  std::vector<std::string> all = {""};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].size() < 5)
      for (char c : {'a', 'b', 'c'}) all.push_back(all[i] + c);
  }
  std::map<std::pair<std::string, std::string>, int> dist;
  for (const auto &src : all) {
    if (src.size() > 4) continue;
    std::unordered_map<std::string, int> seen = {{src, 0}};
    std::deque<std::string> q = {src};
    while (!q.empty()) {
      std::string s = q.front();
      q.pop_front();
      std::vector<std::string> next;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        for (char c : {'a', 'b', 'c'}) {
          if (s.size() < 5) next.push_back(s.substr(0, i) + c + s.substr(i));
          if (i < s.size()) next.push_back(s.substr(0, i) + c + s.substr(i + 1));
        }
        if (i < s.size()) next.push_back(s.substr(0, i) + s.substr(i + 1));
      }
      for (auto &n : next) {
        if (seen.emplace(n, seen[s] + 1).second) q.push_back(n);
      }
    }
    for (const auto &[dst, d] : seen) {
      if (dst.size() <= 4) dist[{src, dst}] = d;
    }
  }
  return dist;
}

TEST(EditDistanceTest, MatchesExhaustiveEditScripts) {
  auto oracle = ScriptOracle();
  ASSERT_EQ(oracle.size(), 121u * 121u);
  for (const auto &[pair, d] : oracle) {
    ASSERT_EQ(EditDistance(pair.first, pair.second), d) << pair.first << " -> " << pair.second;
  }
}

TEST(EditDistanceTest, IsAMetric) {
  Rng rng(8);
  auto word = [&] {
    std::string s;
    const int n = static_cast<int>(rng.Below(8));
    for (int i = 0; i < n; ++i) s += static_cast<char>('a' + rng.Below(4));
    return s;
  };
  for (int k = 0; k < 500; ++k) {
    const std::string x = word(), y = word(), z = word();
    EXPECT_GE(EditDistance(x, y), 0);
    EXPECT_EQ(EditDistance(x, y), EditDistance(y, x));
    EXPECT_EQ(EditDistance(x, y) == 0, x == y);
    EXPECT_LE(EditDistance(x, z), EditDistance(x, y) + EditDistance(y, z));
  }
}

TEST(SedTest, AllAndIncorrectOnly) {
  std::vector<Tokens> g = {T("it"), T("Perth"), T("the tower")};
  std::vector<Tokens> p = {T("it"), T("Perth ,"), T("tower")};
  SedSummary s = StringEditDistance(p, g);
  EXPECT_DOUBLE_EQ(s.all, (0 + 2 + 4) / 3.0);
  EXPECT_DOUBLE_EQ(s.incorrect_only, 3.0);
  EXPECT_EQ(s.incorrect, 2u);
  EXPECT_DOUBLE_EQ(s.tokens, (0 + 1 + 1) / 3.0);
}

// ---------------------------------------------------------------------------
// Pronoun metrics

TEST(PronounMetricsTest, AllVerbatim) {
  std::vector<Tokens> g = {T("it"), T("she"), T("Perth")};
  PronounMetrics m = ComputePronounMetrics(g, g);
  EXPECT_EQ(m.accuracy, 1.0);
  EXPECT_EQ(m.precision, 1.0);
  EXPECT_EQ(m.recall, 1.0);
  EXPECT_EQ(m.f1, 1.0);
  EXPECT_FALSE(m.undefined);
}

TEST(PronounMetricsTest, EmptyPredictionIsNotAPronoun) {
  EXPECT_FALSE(IsPronoun({}));
  EXPECT_TRUE(IsPronoun(T("It")));
  PronounMetrics m = ComputePronounMetrics({{}, T("Perth")}, {T("it"), T("Perth")});
  EXPECT_EQ(m.false_negatives, 1);
  EXPECT_EQ(m.accuracy, 0.0);
}

TEST(PronounMetricsTest, NoPronounsPredicted) {
  std::vector<Tokens> g = {T("it"), T("Perth")};
  PronounMetrics m = ComputePronounMetrics({T("Alpha"), T("Perth")}, g);
  EXPECT_EQ(m.recall, 0.0);
  EXPECT_EQ(m.precision, 0.0);
  EXPECT_TRUE(m.undefined);
}

TEST(PronounMetricsTest, ConfusionCounts) {
  // tp = 3 (one with the wrong pronoun), fp = 1, fn = 1, plus a true negative.
  std::vector<Tokens> g = {T("it"), T("it"), T("he"), T("Perth"), T("she"), T("Perth")};
  std::vector<Tokens> p = {T("it"), T("it"), T("she"), T("it"), T("Perth"), T("Perth")};
  PronounMetrics m = ComputePronounMetrics(p, g);
  EXPECT_EQ(m.true_positives, 3);
  EXPECT_EQ(m.false_positives, 1);
  EXPECT_EQ(m.false_negatives, 1);
  EXPECT_DOUBLE_EQ(m.precision, 0.75);
  EXPECT_DOUBLE_EQ(m.recall, 0.75);
  EXPECT_DOUBLE_EQ(m.f1, 0.75);
  EXPECT_DOUBLE_EQ(m.accuracy, 2.0 / 4.0);
}

// ---------------------------------------------------------------------------
// Relexicalization

TEST(RelexicalizeTest, FixtureRoundTrip) {
  auto entries = ParseTemplateFileAt(testing::FixturePath("terrace.txt"));
  ASSERT_EQ(entries.size(), 1u);
  const auto &e = entries[0];
  auto gold = ExtractRefexes(e.original_tokens, e.template_tokens, e.map);
  std::map<int, Tokens> assigned;
  for (int k = 0; k < static_cast<int>(gold.size()); ++k) assigned[k] = gold[k].tokens;
  Tokens text = Relexicalize(e.template_tokens, assigned);
  EXPECT_EQ(Join(text), Join(e.original_tokens));
}

TEST(RelexicalizeTest, NoTagsUnchanged) {
  EXPECT_EQ(Relexicalize(T("nothing to fill ."), {}), T("nothing to fill ."));
}

TEST(RelexicalizeTest, OccurrencesAreFilledSeparately) {
  Tokens tpl = T("AGENT-1 met PATIENT-1 . AGENT-1 left .");
  auto out = Relexicalize(tpl, {{0, T("Ann Lee")}, {1, T("Bo")}, {2, T("she")}});
  EXPECT_EQ(out, T("Ann Lee met Bo . she left ."));
}

TEST(RelexicalizeTest, ConstantsAndMissingTags) {
  Tokens tpl = T("AGENT-1 was born in PATIENT-1 .");
  EXPECT_EQ(Relexicalize(tpl, {{0, T("She")}}, {{"PATIENT-1", T("1988")}}), T("She was born in 1988 ."));
  try {
    Relexicalize(tpl, {{0, T("She")}});
    FAIL();
  } catch (const ContractError &e) {
    EXPECT_NE(std::string(e.what()).find("PATIENT-1"), std::string::npos);
  }
}

TEST(RelexicalizeTest, TextsFromPredictions) {
  auto entries = ParseTemplateFileAt(testing::FixturePath("terrace.txt"));
  CorpusInstances corpus = BuildCorpus(entries);
  std::map<std::string, Tokens> preds;
  for (const auto &inst : corpus.instances) preds[inst.id()] = inst.refex;
  auto texts = RelexicalizeTexts(entries, preds);
  ASSERT_EQ(texts.size(), 1u);
  EXPECT_EQ(texts[0].candidate, texts[0].reference);
  EXPECT_DOUBLE_EQ(TextAccuracy(texts), 1.0);

  preds[corpus.instances[3].id()] = T("The building");
  texts = RelexicalizeTexts(entries, preds);
  EXPECT_DOUBLE_EQ(TextAccuracy(texts), 0.0);

  preds.erase(corpus.instances[0].id());
  EXPECT_THROW(RelexicalizeTexts(entries, preds), ContractError);
  EXPECT_TRUE(RelexicalizeTexts(entries, {}).empty());
}

// ---------------------------------------------------------------------------
// BLEU

TEST(BleuTest, IdentityIsHundred) {
  std::vector<Tokens> c = {T("the tower was completed in 1988 ."), T("it has 50 floors and more")};
  EXPECT_EQ(CorpusBleu(c, c).score, 100.0);
}

TEST(BleuTest, NoOverlapIsZero) {
  EXPECT_EQ(CorpusBleu({T("a b c d e")}, {T("v w x y z")}).score, 0.0);
}

TEST(BleuTest, ClippedUnigramPrecision) {
  BleuScore b = CorpusBleu({T("the the the the the the the")}, {T("the cat is on the mat")});
  EXPECT_DOUBLE_EQ(b.precisions[0], 2.0 / 7.0);
  EXPECT_EQ(b.score, 0.0);
}

TEST(BleuTest, HandComputed) {
  BleuScore b = CorpusBleu({T("a b c d e f")}, {T("a b c d x f")});
  EXPECT_DOUBLE_EQ(b.precisions[0], 5.0 / 6);
  EXPECT_DOUBLE_EQ(b.precisions[1], 3.0 / 5);
  EXPECT_DOUBLE_EQ(b.precisions[2], 2.0 / 4);
  EXPECT_DOUBLE_EQ(b.precisions[3], 1.0 / 3);
  EXPECT_NEAR(b.score, 100 * std::pow(1.0 / 12, 0.25), 1e-12);

  BleuScore short_c = CorpusBleu({T("a b c d")}, {T("a b c d e f")});
  EXPECT_NEAR(short_c.brevity_penalty, std::exp(-0.5), 1e-15);
  EXPECT_NEAR(short_c.score, 100 * std::exp(-0.5), 1e-12);
}

TEST(BleuTest, MultipleReferences) {
  BleuStats s = SentenceStats(T("the the cat"), {T("the cat"), T("the the dog"), T("a b c d")});
  EXPECT_EQ(s.matches[0], 3);  // "the" clipped at 2 by the second reference
  EXPECT_EQ(s.reference_length, 3);
  BleuStats tie = SentenceStats(T("a b c"), {T("a b c d"), T("a b")});
  EXPECT_EQ(tie.reference_length, 2);
}

TEST(BleuTest, InvariantUnderCorpusReordering) {
  std::vector<Tokens> c = {T("a b c d e"), T("x y z w v u"), T("p q r s t")};
  std::vector<Tokens> r = {T("a b c d f"), T("x y z w v"), T("p q r s t u")};
  const double s = CorpusBleu(c, r).score;
  EXPECT_DOUBLE_EQ(CorpusBleu({c[2], c[0], c[1]}, {r[2], r[0], r[1]}).score, s);
  EXPECT_GT(s, 0.0);
  EXPECT_LE(s, 100.0);
}

TEST(BleuTest, Errors) {
  EXPECT_THROW(CorpusBleu(std::vector<Tokens>{}, std::vector<Tokens>{}), ContractError);
  EXPECT_THROW(CorpusBleu({T("a")}, std::vector<Tokens>{}), ContractError);
  EXPECT_EQ(CorpusBleu({Tokens{}}, {T("a b c d")}).score, 0.0);
}

// ---------------------------------------------------------------------------
// Significance

TEST(McNemarTest, Examples) {
  TestResult r = McNemar(10, 2);
  EXPECT_NEAR(r.statistic, 49.0 / 12.0, 1e-9);
  EXPECT_NEAR(r.p_value, std::erfc(std::sqrt(49.0 / 24.0)), 1e-12);
  TestResult s = McNemar(2, 10);
  EXPECT_EQ(s.statistic, r.statistic);
  EXPECT_EQ(s.p_value, r.p_value);
  TestResult none = McNemar(0, 0);
  EXPECT_EQ(none.p_value, 1.0);
  EXPECT_TRUE(none.degenerate);
  EXPECT_DOUBLE_EQ(McNemar(3, 3).statistic, 1.0 / 6.0);
  TestResult paired = McNemar({true, true, false, false}, {false, true, true, false});
  EXPECT_EQ(paired.n, 2);
}

// Brute force over all 2^n sign patterns, ranks recomputed from scratch.
double WilcoxonOracle(const std::vector<double> &d) {
  const int n = static_cast<int>(d.size());
  std::vector<double> rank(n);
  for (int i = 0; i < n; ++i) {
    int less = 0, equal = 0;
    for (int j = 0; j < n; ++j) {
      less += std::abs(d[j]) < std::abs(d[i]);
      equal += std::abs(d[j]) == std::abs(d[i]);
    }
    rank[i] = less + (equal + 1) / 2.0;
  }
  double total = 0, obs = 0;
  for (int i = 0; i < n; ++i) {
    total += rank[i];
    if (d[i] > 0) obs += rank[i];
  }
  int extreme = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    double w = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) w += rank[i];
    extreme += std::abs(2 * w - total) >= std::abs(2 * obs - total) - 1e-9;
  }
  return static_cast<double>(extreme) / (1 << n);
}

TEST(WilcoxonTest, MatchesEnumeration) {
  Rng rng(17);
  for (int n = 1; n <= 10; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> x(n), y(n, 0.0), d(n);
      for (int i = 0; i < n; ++i) {
        // Small integer magnitudes so ties are common.
        double v = static_cast<double>(1 + rng.Below(4));
        x[i] = rng.Bernoulli(0.5) ? v : -v;
        d[i] = x[i];
      }
      TestResult r = Wilcoxon(x, y);
      EXPECT_TRUE(r.exact);
      EXPECT_NEAR(r.p_value, WilcoxonOracle(d), 1e-12) << "n=" << n;
    }
  }
}

TEST(WilcoxonTest, Examples) {
  TestResult same = Wilcoxon({1, 2, 3}, {1, 2, 3});
  EXPECT_EQ(same.p_value, 1.0);
  EXPECT_TRUE(same.degenerate);
  TestResult one = Wilcoxon({1, 2, 5}, {1, 2, 3});
  EXPECT_EQ(one.n, 1);
  EXPECT_DOUBLE_EQ(one.p_value, 1.0);
  // All six differences positive: p = 2 / 2^6.
  TestResult all = Wilcoxon({2, 3, 4, 5, 6, 7}, {1, 1, 1, 1, 1, 1});
  EXPECT_DOUBLE_EQ(all.p_value, 2.0 / 64);
  EXPECT_DOUBLE_EQ(all.statistic, 0.0);
}

TEST(WilcoxonTest, NegationAndRange) {
  Rng rng(4);
  for (int n : {5, 12, 30, 60}) {
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng.Below(6));
      y[i] = static_cast<double>(rng.Below(6));
    }
    TestResult a = Wilcoxon(x, y), b = Wilcoxon(y, x);
    EXPECT_DOUBLE_EQ(a.p_value, b.p_value);
    EXPECT_GE(a.p_value, 0.0);
    EXPECT_LE(a.p_value, 1.0);
    EXPECT_EQ(a.exact, a.n <= kWilcoxonExactLimit);
  }
}

TEST(WilcoxonTest, NormalApproximation) {
  // 30 distinct magnitudes 1..30, the 10 smallest negative.
  std::vector<double> x(30), y(30, 0.0);
  for (int i = 0; i < 30; ++i) x[i] = i < 10 ? -(i + 1.0) : i + 1.0;
  TestResult r = Wilcoxon(x, y);
  EXPECT_FALSE(r.exact);
  EXPECT_DOUBLE_EQ(r.statistic, 55.0);
  const double mean = 30 * 31 / 4.0, sd = std::sqrt(30 * 31 * 61 / 24.0);
  EXPECT_NEAR(r.p_value, std::erfc(std::abs(410 - mean) / sd / std::sqrt(2.0)), 1e-12);
}

TEST(BonferroniTest, Examples) {
  EXPECT_EQ(Bonferroni({0.03}, 1), std::vector<double>{0.03});
  EXPECT_NEAR(Bonferroni({0.03}, 10)[0], 0.30, 1e-15);
  EXPECT_EQ(Bonferroni({0.5}, 10)[0], 1.0);
  EXPECT_THROW(Bonferroni({0.1, 0.2, 0.3}, 2), ContractError);
}

std::vector<BleuStats> ToyStats(const std::vector<std::string> &cands,
                                const std::vector<std::string> &refs) {
  std::vector<BleuStats> out;
  for (std::size_t i = 0; i < cands.size(); ++i) out.push_back(SentenceStats(T(cands[i]), {T(refs[i])}));
  return out;
}

TEST(BleuRandomizationTest, IdenticalSystems) {
  auto a = ToyStats({"a b c d e", "f g h i j"}, {"a b c d x", "f g h i j"});
  BleuSignificance r = BleuRandomization(a, a, 1000, 1);
  EXPECT_EQ(r.delta, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_EQ(r.ci_low, 0.0);
  EXPECT_EQ(r.ci_high, 0.0);
}

TEST(BleuRandomizationTest, ExhaustiveAgreement) {
  std::vector<std::string> refs, ca, cb;
  Rng rng(6);
  const char *words[] = {"a", "b", "c", "d", "e", "f"};
  for (int t = 0; t < 10; ++t) {
    std::string r, x, y;
    for (int k = 0; k < 8; ++k) {
      const std::string w = words[rng.Below(6)];
      r += w + " ";
      x += (rng.Bernoulli(0.8) ? w : std::string(words[rng.Below(6)])) + " ";
      y += (rng.Bernoulli(0.6) ? w : std::string(words[rng.Below(6)])) + " ";
    }
    refs.push_back(r);
    ca.push_back(x);
    cb.push_back(y);
  }
  auto a = ToyStats(ca, refs), b = ToyStats(cb, refs);
  BleuStats sa, sb;
  for (int i = 0; i < 10; ++i) {
    sa += a[i];
    sb += b[i];
  }
  const double obs = std::abs(BleuFromStats(sa).score - BleuFromStats(sb).score);
  int extreme = 0;
  for (int mask = 0; mask < 1024; ++mask) {
    BleuStats x, y;
    for (int i = 0; i < 10; ++i) {
      x += (mask >> i & 1) ? b[i] : a[i];
      y += (mask >> i & 1) ? a[i] : b[i];
    }
    extreme += std::abs(BleuFromStats(x).score - BleuFromStats(y).score) >= obs;
  }
  const double exact = extreme / 1024.0;
  BleuSignificance r = BleuRandomization(a, b, 5000, 11);
  EXPECT_NEAR(r.p_value, exact, 0.05);
  EXPECT_LE(r.ci_low, r.delta);
  EXPECT_GE(r.ci_high, r.delta);
  BleuSignificance again = BleuRandomization(a, b, 5000, 11);
  EXPECT_EQ(again.p_value, r.p_value);
  EXPECT_EQ(again.ci_low, r.ci_low);
}

TEST(BleuRandomizationTest, Errors) {
  auto a = ToyStats({"a b"}, {"a b"});
  EXPECT_THROW(BleuRandomization(a, a, 999, 1), ContractError);
  EXPECT_THROW(BleuRandomization(a, {}, 1000, 1), ContractError);
}

// ---------------------------------------------------------------------------
// Reports

SystemOutput GoldSystem(const std::string &name, const std::vector<Tokens> &golds) {
  SystemOutput s{name, golds, {}};
  s.texts.push_back({"t1", T("the tower was built in 1988 ."), T("the tower was built in 1988 .")});
  s.texts.push_back({"t2", T("it has fifty floors in total ."), T("it has fifty floors in total .")});
  return s;
}

TEST(ReportTest, PerfectSystem) {
  std::vector<Tokens> g = {T("Alpha Tower"), T("it"), T("the tower")};
  EvalReport r = Evaluate(GoldSystem("gold", g), g);
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_EQ(r.sed.all, 0.0);
  EXPECT_EQ(r.bleu, 100.0);
  EXPECT_EQ(r.text_accuracy, 1.0);
  EXPECT_EQ(r.pronoun.f1, 1.0);
}

TEST(ReportTest, IdenticalSystemsAreNotSignificant) {
  std::vector<Tokens> g = {T("Alpha Tower"), T("it"), T("the tower"), T("Perth")};
  auto s = GoldSystem("a", g);
  s.predictions[1] = T("Alpha Tower");
  s.texts[0].candidate = T("the tower was built in 1989 .");
  auto t = s;
  t.name = "b";
  auto rows = CompareSystems({s, t}, g, 1000, 1);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto &row : rows) {
    EXPECT_GE(row.p_raw, 0.99) << row.metric;
    EXPECT_GE(row.p_bonferroni, 0.99) << row.metric;
  }
}

TEST(ReportTest, BonferroniUsesPairCount) {
  std::vector<Tokens> g(30, T("it"));
  SystemOutput a{"a", g, {}}, b{"b", std::vector<Tokens>(30, T("Perth")), {}};
  SystemOutput c{"c", g, {}};
  for (int i = 0; i < 5; ++i) c.predictions[i] = T("Perth");
  auto rows = CompareSystems({a, b, c}, g, 1000, 1);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto &row : rows) EXPECT_DOUBLE_EQ(row.p_bonferroni, std::min(1.0, 3 * row.p_raw));
  EXPECT_LT(rows[0].p_raw, 0.001);  // a vs b on accuracy: b = 30, c = 0
}

TEST(ReportTest, Writers) {
  std::vector<Tokens> g = {T("Alpha Tower"), T("it")};
  EvalReport r = Evaluate(GoldSystem("neural", g), g);
  std::ostringstream tsv, table, sig;
  WriteReportTsv(tsv, {r});
  EXPECT_EQ(tsv.str().substr(0, tsv.str().find('\t')), "system");
  EXPECT_NE(tsv.str().find("neural\t2\t1.0000\t0.0000"), std::string::npos);
  WriteReportTable(table, {r});
  EXPECT_NE(table.str().find("All References | Pronouns"), std::string::npos);
  WriteSignificanceTsv(sig, {{"a", "b", "accuracy", 4.0, 0.04, 0.08}});
  EXPECT_EQ(sig.str(),
            "system_a\tsystem_b\tmetric\tstatistic\tp_raw\tp_bonferroni\tci_low\tci_high\n"
            "a\tb\taccuracy\t4\t0.04\t0.08\t-\t-\n");
}

}  // namespace
}  // namespace nreg
