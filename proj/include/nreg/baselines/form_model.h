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

#ifndef NREG_BASELINES_FORM_MODEL_H_
#define NREG_BASELINES_FORM_MODEL_H_

#include <array>
#include <iosfwd>
#include <vector>

#include "nreg/corpus/instance.h"
#include "nreg/tensor/rng.h"

namespace nreg {

// Distribution over forms, indexed like kAllForms.
using FormDistribution = std::array<double, 4>;

inline constexpr int kNumFeatures = 3;  // position, text status, sentence status
inline constexpr std::array<int, kNumFeatures> kFeatureArity = {3, 2, 2};
inline constexpr std::array<const char *, kNumFeatures> kFeatureNames = {
    "syntactic_position", "text_status", "sentence_status"};

// Value index of feature j (0 position, 1 text status, 2 sentence status).
int FeatureValue(const FormFeatures &features, int j);

enum class ChoiceMode { kArgmax, kSample };

// Naive Bayes over referential forms with additive smoothing:
//
//   P(f)         = (n_f + a) / (N + a |F|)
//   P(x_j = v|f) = (n_{j,v,f} + a) / (n_f + a |X_j|)
//   P(f | X)     = P(f) prod_j P(x_j|f) / sum_f' P(f') prod_j P(x_j|f')
//
// with a = smoothing (1 by default).
class FormModel {
 public:
  FormModel() = default;

  // Throws ContractError on an empty set or an instance without features.
  static FormModel Train(const std::vector<RefexInstance> &instances);

  void AddCount(Form form, const FormFeatures &features, double weight = 1.0);

  FormDistribution Posterior(const FormFeatures &features) const;

  // Argmax breaks ties in the order name, description, demonstrative,
  // pronoun. Sampling walks the same order and uses one draw of `rng`.
  Form Choose(const FormFeatures &features, ChoiceMode mode, Rng &rng) const;
  Form Choose(const FormFeatures &features) const;

  // Every count, the pseudo-count included, multiplied by `factor` > 0.
  FormModel Scaled(double factor) const;

  double prior_count(Form f) const { return prior_[static_cast<int>(f)]; }
  double conditional_count(int feature, int value, Form f) const {
    return cond_[feature][value][static_cast<int>(f)];
  }
  double total() const;
  double smoothing() const { return smoothing_; }
  void set_smoothing(double a) { smoothing_ = a; }

  // Plain-text tables: "smoothing<TAB>a", "form<TAB>count" and
  // "feature<TAB>value<TAB>form<TAB>count" lines.
  void Write(std::ostream &out) const;
  static FormModel Read(std::istream &in);

  bool operator==(const FormModel &) const = default;

 private:
  double smoothing_ = 1.0;
  std::array<double, 4> prior_{};
  std::array<std::array<std::array<double, 4>, 3>, kNumFeatures> cond_{};
};

// Forms in argmax tie-break order.
inline constexpr std::array<Form, 4> kFormPreference = {Form::kName, Form::kDescription,
                                                        Form::kDemonstrative, Form::kPronoun};

}  // namespace nreg

#endif  // NREG_BASELINES_FORM_MODEL_H_
