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

#include "nreg/baselines/ferreira.h"

#include <filesystem>
#include <fstream>

#include "nreg/baselines/features.h"
#include "nreg/error.h"

namespace nreg {

FerreiraModel FerreiraModel::Train(std::vector<RefexInstance> instances) {
  FillFeatures(instances);
  return {FormModel::Train(instances), VariantTable::Train(instances)};
}

Tokens FerreiraModel::Predict(const RefexInstance &instance, ChoiceMode mode, Rng &rng) const {
  FormFeatures features =
      instance.features ? *instance.features : ExtractFeaturesHeuristic(instance);
  Form form = forms.Choose(features, mode, rng);
  return SplitWhitespace(variants.Select(instance.entity, features, form).refex);
}

Tokens FerreiraModel::Predict(const RefexInstance &instance) const {
  Rng unused(0);
  return Predict(instance, ChoiceMode::kArgmax, unused);
}

void FerreiraModel::Save(const std::string &dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream f(dir + "/form_model.txt");
  forms.Write(f);
  std::ofstream v(dir + "/variants.tsv");
  variants.Write(v);
  if (!f || !v) throw Error("cannot write baseline tables to " + dir);
}

FerreiraModel FerreiraModel::Load(const std::string &dir) {
  std::ifstream f(dir + "/form_model.txt");
  std::ifstream v(dir + "/variants.tsv");
  if (!f || !v) throw FormatError("missing form_model.txt or variants.tsv in " + dir);
  return {FormModel::Read(f), VariantTable::Read(v)};
}

}  // namespace nreg
