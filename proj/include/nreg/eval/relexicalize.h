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

#ifndef NREG_EVAL_RELEXICALIZE_H_
#define NREG_EVAL_RELEXICALIZE_H_

#include <map>
#include <string>
#include <vector>

#include "nreg/corpus/template_file.h"

namespace nreg {

// Fills every tag occurrence of a template. `assignments` is keyed by the
// occurrence index (0-based over all tags in the template); occurrences
// without an assignment fall back to `constants`, keyed by tag. Throws
// ContractError naming the tag when neither has a value.
Tokens Relexicalize(const Tokens &template_tokens, const std::map<int, Tokens> &assignments,
                    const std::map<std::string, Tokens> &constants = {});

struct TextPair {
  std::string text_id;
  Tokens candidate;
  Tokens reference;  // the tokenized original text
};

// Relexicalizes every text that has at least one prediction. Predictions are
// keyed by instance ID ("t0001:3"). Constants receive the span they have in
// the original text. Throws ContractError when a text has a prediction for
// some but not all of its entity references.
std::vector<TextPair> RelexicalizeTexts(const std::vector<TemplateEntry> &entries,
                                        const std::map<std::string, Tokens> &predictions);

// Fraction of texts whose candidate equals the reference, ignoring case.
double TextAccuracy(const std::vector<TextPair> &texts);

}  // namespace nreg

#endif  // NREG_EVAL_RELEXICALIZE_H_
