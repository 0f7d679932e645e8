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

#include "nreg/eval/significance.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nreg/error.h"
#include "nreg/tensor/rng.h"

namespace nreg {
namespace {

// Upper tail of chi-square with one degree of freedom.
double ChiSquare1Tail(double x) { return std::erfc(std::sqrt(x / 2.0)); }

double Clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

}  // namespace

TestResult McNemar(int b, int c) {
  if (b < 0 || c < 0) throw ContractError("negative discordant count");
  TestResult r;
  r.n = b + c;
  if (r.n == 0) {
    r.degenerate = true;
    return r;
  }
  const double d = std::abs(b - c) - 1.0;
  r.statistic = d * d / r.n;
  r.p_value = Clamp01(ChiSquare1Tail(r.statistic));
  return r;
}

TestResult McNemar(const std::vector<bool> &a, const std::vector<bool> &b) {
  if (a.size() != b.size()) throw ContractError("McNemar samples differ in length");
  int only_a = 0, only_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    only_a += a[i] && !b[i];
    only_b += !a[i] && b[i];
  }
  return McNemar(only_a, only_b);
}

TestResult Wilcoxon(const std::vector<double> &x, const std::vector<double> &y) {
  if (x.size() != y.size()) throw ContractError("Wilcoxon samples differ in length");
  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) d.push_back(x[i] - y[i]);
  }
  TestResult r;
  r.n = static_cast<int>(d.size());
  if (d.empty()) {
    r.degenerate = true;
    return r;
  }
  const int n = r.n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return std::abs(d[i]) < std::abs(d[j]); });
  // Doubled ranks keep average ranks integral.
  std::vector<int> rank2(n);
  double tie_term = 0;
  for (int i = 0; i < n;) {
    int j = i;
    while (j + 1 < n && std::abs(d[order[j + 1]]) == std::abs(d[order[i]])) ++j;
    for (int k = i; k <= j; ++k) rank2[order[k]] = i + j + 2;
    const double t = j - i + 1;
    tie_term += t * t * t - t;
    i = j + 1;
  }
  long w_plus2 = 0, total2 = 0;
  for (int i = 0; i < n; ++i) {
    total2 += rank2[i];
    if (d[i] > 0) w_plus2 += rank2[i];
  }
  r.statistic = std::min(w_plus2, total2 - w_plus2) / 2.0;
  const long dev = std::labs(2 * w_plus2 - total2);

  if (n <= kWilcoxonExactLimit) {
    // Distribution of doubled W+ over all 2^n sign patterns.
    std::vector<double> ways(static_cast<std::size_t>(total2) + 1, 0.0);
    ways[0] = 1;
    long reach = 0;
    for (int i = 0; i < n; ++i) {
      reach += rank2[i];
      for (long s = reach; s >= rank2[i]; --s) ways[s] += ways[s - rank2[i]];
    }
    double extreme = 0;
    for (long s = 0; s <= total2; ++s) {
      if (std::labs(2 * s - total2) >= dev) extreme += ways[s];
    }
    r.p_value = Clamp01(extreme / std::ldexp(1.0, n));
    r.exact = true;
    return r;
  }
  const double nn = n;
  const double var = nn * (nn + 1) * (2 * nn + 1) / 24.0 - tie_term / 48.0;
  if (var <= 0) {
    r.degenerate = true;
    return r;
  }
  const double z = (w_plus2 / 2.0 - nn * (nn + 1) / 4.0) / std::sqrt(var);
  r.p_value = Clamp01(std::erfc(std::abs(z) / std::sqrt(2.0)));
  return r;
}

std::vector<double> Bonferroni(const std::vector<double> &p_values, int m) {
  if (m < static_cast<int>(p_values.size()) || m < 1) {
    throw ContractError("Bonferroni factor " + std::to_string(m) + " below the number of tests " +
                        std::to_string(p_values.size()));
  }
  std::vector<double> out;
  out.reserve(p_values.size());
  for (double p : p_values) out.push_back(std::min(1.0, p * m));
  return out;
}

BleuSignificance BleuRandomization(const std::vector<BleuStats> &a,
                                   const std::vector<BleuStats> &b, int iterations,
                                   std::uint64_t seed, double confidence) {
  if (a.size() != b.size() || a.empty()) {
    throw ContractError("randomization needs two aligned, non-empty corpora");
  }
  if (iterations < 1000) throw ContractError("randomization needs at least 1000 iterations");
  auto delta_of = [](const BleuStats &x, const BleuStats &y) {
    return BleuFromStats(x).score - BleuFromStats(y).score;
  };
  BleuStats sum_a, sum_b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum_a += a[i];
    sum_b += b[i];
  }
  BleuSignificance r;
  r.iterations = iterations;
  r.delta = delta_of(sum_a, sum_b);

  const Rng base(seed);
  Rng swap_rng = base.Fork(1);
  int extreme = 0;
  for (int it = 0; it < iterations; ++it) {
    BleuStats x, y;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const bool swap = swap_rng.Bernoulli(0.5);
      x += swap ? b[i] : a[i];
      y += swap ? a[i] : b[i];
    }
    extreme += std::abs(delta_of(x, y)) >= std::abs(r.delta);
  }
  r.p_value = (extreme + 1.0) / (iterations + 1.0);

  Rng boot_rng = base.Fork(2);
  std::vector<double> deltas(iterations);
  for (int it = 0; it < iterations; ++it) {
    BleuStats x, y;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::size_t i = static_cast<std::size_t>(boot_rng.Below(a.size()));
      x += a[i];
      y += b[i];
    }
    deltas[it] = delta_of(x, y);
  }
  std::sort(deltas.begin(), deltas.end());
  const double tail = (1.0 - confidence) / 2.0;
  auto at = [&](double q) {
    const auto k = static_cast<std::size_t>(std::floor(q * (iterations - 1) + 0.5));
    return deltas[std::min(k, deltas.size() - 1)];
  };
  r.ci_low = at(tail);
  r.ci_high = at(1.0 - tail);
  return r;
}

}  // namespace nreg
