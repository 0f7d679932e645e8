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

#ifndef NREG_BASELINES_FEATURES_H_
#define NREG_BASELINES_FEATURES_H_

#include <string_view>
#include <vector>

#include "nreg/corpus/instance.h"

namespace nreg {

// Form features read off the instance contexts alone.
//
//   text_status      given iff the entity's wikified ID occurs in the
//                    pre-context.
//   sentence_status  given iff it occurs after the last sentence boundary
//                    (". ! ?") of the pre-context.
//   position         genitive if the slot is followed by "'s"; subject if no
//                    verb-like token precedes the slot inside its sentence;
//                    object otherwise.
//
// A token is verb-like when it is an auxiliary or copula (is, was, has, ...),
// one of a few frequent finite verbs, or ends in "ed" and is longer than
// three characters. Wikified IDs of other entities are never verb-like.
FormFeatures ExtractFeaturesHeuristic(const RefexInstance &instance);

bool IsVerbLike(std::string_view token);

enum class FeatureSource { kFile, kHeuristic, kMixed, kNone };

std::string_view FeatureSourceName(FeatureSource source);

// Fills missing features with the heuristic and reports where the features
// came from.
FeatureSource FillFeatures(std::vector<RefexInstance> &instances);

}  // namespace nreg

#endif  // NREG_BASELINES_FEATURES_H_
