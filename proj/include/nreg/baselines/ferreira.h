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

#ifndef NREG_BASELINES_FERREIRA_H_
#define NREG_BASELINES_FERREIRA_H_

#include <string>
#include <vector>

#include "nreg/baselines/form_model.h"
#include "nreg/baselines/variant_table.h"

namespace nreg {

// Form choice by FormModel, then content by VariantTable keyed on the
// predicted form.
struct FerreiraModel {
  FormModel forms;
  VariantTable variants;

  // Instances without features get heuristic ones first.
  static FerreiraModel Train(std::vector<RefexInstance> instances);

  Tokens Predict(const RefexInstance &instance, ChoiceMode mode, Rng &rng) const;
  Tokens Predict(const RefexInstance &instance) const;

  // Writes/reads form_model.txt and variants.tsv inside `dir`.
  void Save(const std::string &dir) const;
  static FerreiraModel Load(const std::string &dir);
};

}  // namespace nreg

#endif  // NREG_BASELINES_FERREIRA_H_
