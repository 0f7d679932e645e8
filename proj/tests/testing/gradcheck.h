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

// Central finite-difference oracle for tape gradients. Test-only; it
// evaluates the loss through the public op API and perturbs raw values, so it
// shares no code with the backward rules it checks.

#ifndef NREG_TESTS_TESTING_GRADCHECK_H_
#define NREG_TESTS_TESTING_GRADCHECK_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "nreg/tensor/parameters.h"
#include "nreg/tensor/tape.h"

namespace nreg::testing {

struct GradCheckResult {
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  std::string worst;  // "name[index]"
  std::size_t checked = 0;
};

struct GradCheckOptions {
  double eps = 1e-5;
  // 2: (f(x+h) - f(x-h)) / 2h. 4: the five-point stencil.
  int order = 2;
  // Denominator floor of the relative error.
  double floor = 1e-6;
};

// |a - n| / max(|a|, |n|, floor).
inline double RelError(double analytic, double numeric, double floor = 1e-6) {
  const double denom = std::max({std::abs(analytic), std::abs(numeric), floor});
  return std::abs(analytic - numeric) / denom;
}

// `loss` builds a scalar on the given tape from the parameters. It must be a
// pure function of the parameter values (reseed any Rng inside).
inline GradCheckResult CheckGradients(
    ParameterSet<double> &params,
    const std::function<Var<double>(Tape<double> &, ParameterSet<double> &)> &loss,
    const GradCheckOptions &opt = {}) {
  const double eps = opt.eps;
  params.ZeroGrad();
  {
    Tape<double> tape;
    Var<double> l = loss(tape, params);
    tape.Backward(l);
  }
  GradCheckResult result;
  for (auto &entry : params) {
    Tensor<double> &t = entry.tensor;
    std::vector<double> analytic(t.grad().begin(), t.grad().end());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double saved = t[i];
      auto eval = [&](double v) {
        t[i] = v;
        Tape<double> tape(false);
        return loss(tape, params).value()[0];
      };
      double numeric = (eval(saved + eps) - eval(saved - eps)) / (2 * eps);
      if (opt.order == 4) {
        const double wide = (eval(saved + 2 * eps) - eval(saved - 2 * eps)) / (4 * eps);
        numeric = (4 * numeric - wide) / 3;
      }
      t[i] = saved;
      const double rel = RelError(analytic[i], numeric, opt.floor);
      result.max_abs_error = std::max(result.max_abs_error, std::abs(analytic[i] - numeric));
      if (rel > result.max_rel_error) {
        result.max_rel_error = rel;
        result.worst = entry.name + "[" + std::to_string(i) + "]";
      }
      ++result.checked;
    }
  }
  return result;
}

}  // namespace nreg::testing

#endif  // NREG_TESTS_TESTING_GRADCHECK_H_
