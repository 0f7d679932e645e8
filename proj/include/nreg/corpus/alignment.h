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

#ifndef NREG_CORPUS_ALIGNMENT_H_
#define NREG_CORPUS_ALIGNMENT_H_

#include <string>
#include <vector>

#include "nreg/corpus/entities.h"
#include "nreg/corpus/text.h"
#include "nreg/error.h"

namespace nreg {

// A template/text pair whose reference slots cannot be recovered.
class AlignmentError : public Error {
 public:
  AlignmentError(const std::string &what, Tokens template_tokens, Tokens original_tokens)
      : Error(what),
        template_tokens_(std::move(template_tokens)),
        original_tokens_(std::move(original_tokens)) {}

  const Tokens &template_tokens() const { return template_tokens_; }
  const Tokens &original_tokens() const { return original_tokens_; }

 private:
  Tokens template_tokens_;
  Tokens original_tokens_;
};

// One reference slot of a template and the original tokens realizing it.
struct ExtractedRefex {
  std::string tag;
  Tokens tokens;
};

// Recovers the original span behind every tag occurrence, in template order.
//
// Template and original are aligned by a token-level longest common
// subsequence in which tags never match. Ties between equally long
// alignments are resolved by matching the earliest possible pair. Between
// two consecutive matched pairs the template must hold exactly one tag and
// the original a non-empty span (or both nothing); anything else raises
// AlignmentError. Tags must be present in `map`.
std::vector<ExtractedRefex> ExtractRefexes(const Tokens &original, const Tokens &template_tokens,
                                           const EntityTagMap &map);

}  // namespace nreg

#endif  // NREG_CORPUS_ALIGNMENT_H_
