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

#include "nreg/baselines/form_model.h"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "nreg/error.h"

namespace nreg {
namespace {

std::string_view FeatureValueName(int feature, int value) {
  if (feature == 0) return PositionName(static_cast<SyntacticPosition>(value));
  return StatusName(static_cast<InfoStatus>(value));
}

int ParseFeatureValue(int feature, std::string_view name) {
  if (feature == 0) return static_cast<int>(ParsePosition(name));
  return static_cast<int>(ParseStatus(name));
}

double ParseCount(const std::string &s) {
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size() || !std::isfinite(v) || v < 0) throw FormatError("bad count '" + s + "'");
  return v;
}

std::string FormatCount(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

}  // namespace

int FeatureValue(const FormFeatures &features, int j) {
  switch (j) {
    case 0: return static_cast<int>(features.position);
    case 1: return static_cast<int>(features.text_status);
    default: return static_cast<int>(features.sentence_status);
  }
}

FormModel FormModel::Train(const std::vector<RefexInstance> &instances) {
  if (instances.empty()) throw ContractError("form model needs training instances");
  FormModel model;
  for (const auto &inst : instances) {
    if (!inst.features) throw ContractError("instance " + inst.id() + " has no form features");
    model.AddCount(inst.form, *inst.features);
  }
  return model;
}

void FormModel::AddCount(Form form, const FormFeatures &features, double weight) {
  const int f = static_cast<int>(form);
  prior_[f] += weight;
  for (int j = 0; j < kNumFeatures; ++j) cond_[j][FeatureValue(features, j)][f] += weight;
}

double FormModel::total() const { return prior_[0] + prior_[1] + prior_[2] + prior_[3]; }

FormDistribution FormModel::Posterior(const FormFeatures &features) const {
  const double a = smoothing_;
  const double n = total();
  FormDistribution p{};
  double z = 0;
  for (int f = 0; f < 4; ++f) {
    double v = (prior_[f] + a) / (n + 4 * a);
    for (int j = 0; j < kNumFeatures; ++j) {
      v *= (cond_[j][FeatureValue(features, j)][f] + a) / (prior_[f] + a * kFeatureArity[j]);
    }
    p[f] = v;
    z += v;
  }
  if (!(z > 0)) throw NumericError("form posterior has no mass; smoothing must be positive");
  for (double &v : p) v /= z;
  return p;
}

Form FormModel::Choose(const FormFeatures &features, ChoiceMode mode, Rng &rng) const {
  FormDistribution p = Posterior(features);
  if (mode == ChoiceMode::kSample) {
    double u = rng.Uniform(), acc = 0;
    for (Form f : kFormPreference) {
      acc += p[static_cast<int>(f)];
      if (u < acc) return f;
    }
    for (auto it = kFormPreference.rbegin(); it != kFormPreference.rend(); ++it) {
      if (p[static_cast<int>(*it)] > 0) return *it;
    }
  }
  Form best = kFormPreference[0];
  for (Form f : kFormPreference) {
    if (p[static_cast<int>(f)] > p[static_cast<int>(best)]) best = f;
  }
  return best;
}

Form FormModel::Choose(const FormFeatures &features) const {
  Rng unused(0);
  return Choose(features, ChoiceMode::kArgmax, unused);
}

FormModel FormModel::Scaled(double factor) const {
  if (!(factor > 0)) throw ContractError("scale factor must be positive");
  FormModel out = *this;
  out.smoothing_ *= factor;
  for (double &v : out.prior_) v *= factor;
  for (auto &feature : out.cond_) {
    for (auto &value : feature) {
      for (double &v : value) v *= factor;
    }
  }
  return out;
}

void FormModel::Write(std::ostream &out) const {
  out << "smoothing\t" << FormatCount(smoothing_) << '\n';
  for (Form f : kAllForms) out << FormName(f) << '\t' << FormatCount(prior_count(f)) << '\n';
  for (int j = 0; j < kNumFeatures; ++j) {
    for (int v = 0; v < kFeatureArity[j]; ++v) {
      for (Form f : kAllForms) {
        out << kFeatureNames[j] << '\t' << FeatureValueName(j, v) << '\t' << FormName(f) << '\t'
            << FormatCount(conditional_count(j, v, f)) << '\n';
      }
    }
  }
}

FormModel FormModel::Read(std::istream &in) {
  FormModel model;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitFields(line, '\t');
    try {
      if (fields.size() == 2 && fields[0] == "smoothing") {
        model.smoothing_ = ParseCount(fields[1]);
      } else if (fields.size() == 2) {
        model.prior_[static_cast<int>(ParseForm(fields[0]))] = ParseCount(fields[1]);
      } else if (fields.size() == 4) {
        int j = 0;
        while (j < kNumFeatures && fields[0] != kFeatureNames[j]) ++j;
        if (j == kNumFeatures) throw FormatError("unknown feature '" + fields[0] + "'");
        model.cond_[j][ParseFeatureValue(j, fields[1])][static_cast<int>(ParseForm(fields[2]))] =
            ParseCount(fields[3]);
      } else {
        throw FormatError("expected 2 or 4 fields");
      }
    } catch (const std::exception &e) {
      throw FormatError("form model line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return model;
}

}  // namespace nreg
