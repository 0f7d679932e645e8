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

#include "nreg/baselines/features.h"

#include <set>
#include <string>

namespace nreg {
namespace {

bool IsBoundary(const std::string &tok) { return tok == "." || tok == "!" || tok == "?"; }

const std::set<std::string, std::less<>> &VerbList() {
  static const std::set<std::string, std::less<>> verbs = {
      "is",     "are",   "was",   "were",    "am",    "be",     "been",   "has",
      "have",   "had",   "does",  "do",      "did",   "will",   "would",  "can",
      "could",  "shall", "should", "may",    "might", "must",   "lies",   "serves",
      "plays",  "leads", "runs",  "belongs", "means", "owns",   "houses", "includes",
      "became", "made",  "began", "won",     "wrote", "born",   "holds",  "contains"};
  return verbs;
}

}  // namespace

bool IsVerbLike(std::string_view token) {
  if (token.find('_') != std::string_view::npos) return false;
  if (VerbList().count(token) != 0) return true;
  return token.size() > 3 && token.ends_with("ed");
}

FormFeatures ExtractFeaturesHeuristic(const RefexInstance &instance) {
  const std::string id = Lowercase(WikifiedForm(instance.entity));
  const Tokens &pre = instance.pre_context;

  std::size_t sentence_start = 0;
  for (std::size_t i = 0; i < pre.size(); ++i) {
    if (IsBoundary(pre[i])) sentence_start = i + 1;
  }

  FormFeatures f;
  for (std::size_t i = 0; i < pre.size(); ++i) {
    if (pre[i] != id) continue;
    f.text_status = InfoStatus::kGiven;
    if (i >= sentence_start) f.sentence_status = InfoStatus::kGiven;
  }

  if (!instance.pos_context.empty() && instance.pos_context.front() == "'s") {
    f.position = SyntacticPosition::kGenitive;
  } else {
    f.position = SyntacticPosition::kSubject;
    for (std::size_t i = sentence_start; i < pre.size(); ++i) {
      if (IsVerbLike(pre[i])) {
        f.position = SyntacticPosition::kObject;
        break;
      }
    }
  }
  return f;
}

std::string_view FeatureSourceName(FeatureSource source) {
  switch (source) {
    case FeatureSource::kFile: return "file";
    case FeatureSource::kHeuristic: return "heuristic";
    case FeatureSource::kMixed: return "mixed";
    case FeatureSource::kNone: return "none";
  }
  return "none";
}

FeatureSource FillFeatures(std::vector<RefexInstance> &instances) {
  bool any_file = false, any_heuristic = false;
  for (auto &inst : instances) {
    if (inst.features) {
      any_file = true;
    } else {
      inst.features = ExtractFeaturesHeuristic(inst);
      any_heuristic = true;
    }
  }
  if (any_file && any_heuristic) return FeatureSource::kMixed;
  if (any_file) return FeatureSource::kFile;
  if (any_heuristic) return FeatureSource::kHeuristic;
  return FeatureSource::kNone;
}

}  // namespace nreg
